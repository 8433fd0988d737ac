// Copyright 2026 The matqsym Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// matqsym: batch front end for the matroid quasisymmetric invariant.
//
//   matqsym compute-f --bases "[[1],[2]]" --n 2
//   matqsym compute-f --sigma 01111 --basis L --json
//   echo '{"n":2,"bases":[[1],[2]]}' | matqsym tutte
//
// Exit codes: 0 ok, 1 invalid input, 2 budget exceeded, 3 verification failed.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "matqsym/appendix.hpp"
#include "matqsym/decomp.hpp"
#include "matqsym/errors.hpp"
#include "matqsym/genperm.hpp"
#include "matqsym/invariant.hpp"
#include "matqsym/matroid.hpp"
#include "matqsym/quotient.hpp"

using namespace matqsym;
using ojson = nlohmann::ordered_json;

namespace {

constexpr int kSchema = 1;

struct Inputs {
  std::string bases;
  int n = -1;
  std::string sigma;
  std::string graph;
  std::string file;
  std::string basis = "M";
  bool json = false;
  bool serial = false;
  int max_poset = 12;
};

std::string read_all(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

std::string read_source(const Inputs& in) {
  if (!in.file.empty()) {
    std::ifstream f(in.file);
    if (!f) throw InvalidInput("cannot open " + in.file);
    return read_all(f);
  }
  return read_all(std::cin);
}

Matroid load_matroid(const Inputs& in) {
  const int sources = !in.bases.empty() + !in.sigma.empty() + !in.file.empty();
  if (sources > 1) throw InvalidInput("give exactly one of --bases, --sigma, --input");
  if (!in.sigma.empty()) return freedom_matroid(SigmaString(in.sigma));
  if (!in.bases.empty()) {
    if (in.n < 0) throw InvalidInput("--bases needs --n");
    std::vector<std::vector<int>> lists;
    try {
      lists = nlohmann::json::parse(in.bases).get<std::vector<std::vector<int>>>();
    } catch (const nlohmann::json::exception& e) {
      throw InvalidInput(std::string("--bases: ") + e.what());
    }
    return Matroid::from_base_lists(in.n, lists);
  }
  return parse_matroid_json(read_source(in));
}

InvariantOptions options(const Inputs& in) {
  InvariantOptions o;
  o.exec = in.serial ? Exec::Serial : Exec::Parallel;
  o.limits.max_poset_size = in.max_poset;
  return o;
}

Basis parse_basis(const std::string& b) {
  if (b == "M") return Basis::Monomial;
  if (b == "L") return Basis::Fundamental;
  throw InvalidInput("--basis must be M or L");
}

void emit(const Inputs& in, const std::string& command, const ojson& result, const std::string& text) {
  if (in.json) {
    ojson j;
    j["schema"] = kSchema;
    j["command"] = command;
    j["result"] = result;
    std::cout << j.dump() << "\n";
  } else {
    std::cout << text << "\n";
  }
}

ojson matroid_json(const Matroid& m) { return ojson::parse(m.str()); }

ojson splits_json(const std::vector<HyperplaneSplit>& splits) {
  auto arr = ojson::array();
  for (const auto& s : splits) {
    arr.push_back({{"S", mask_elements(s.s)}, {"k", s.k}, {"certificate", ojson::parse(s.cert.str())}});
  }
  return arr;
}

struct VerifyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matroid quasisymmetric invariants"};
  app.require_subcommand(1);
  Inputs in;
  SearchBudget search;
  int rank = -1;
  bool connected = false;
  bool weak = false;
  std::string qsym_text;

  auto matroid_opts = [&](CLI::App* c, bool with_n = true) {
    c->add_option("--bases", in.bases, "base list as JSON, e.g. [[1],[2]]");
    if (with_n) c->add_option("--n", in.n, "ground set size for --bases");
    c->add_option("--sigma", in.sigma, "freedom matroid from a 0/1 string");
    c->add_option("--input", in.file, "matroid JSON file (default: stdin)");
  };
  auto common = [&](CLI::App* c) {
    c->add_flag("--json", in.json, "JSON output");
    c->add_flag("--serial", in.serial, "use the serial reference kernels");
    c->add_option("--max-poset-size", in.max_poset, "largest poset to enumerate");
  };

  struct Cmd {
    const char* name;
    const char* help;
  };
  const Cmd cmds[] = {
      {"compute-f", "F(M) in the M or L basis"},
      {"compute-fstar", "F*(M) in the M or L basis"},
      {"phi", "phi(M, m) and phi*(M, m)"},
      {"tutte", "Tutte polynomial"},
      {"dual", "dual matroid"},
      {"freedom", "freedom matroid and its strict R_sigma expansion"},
      {"decomp-check", "verify a decomposition certificate"},
      {"split-search", "hyperplane splits of Q(M)"},
      {"quotient-project", "image of F(M) or a QSym element in QSym/m^2"},
      {"hilbert-basis", "indecomposable barF classes of a matroid family"},
      {"enumerate", "matroids up to isomorphism"},
      {"appendix-lu", "A_n = L_n U_n change-of-basis matrices"},
      {"zonotope", "F of a graphic zonotope and the chromatic check"},
      {"reciprocity-check", "phi(-m) = (-1)^n phi*(m) for a matroid or graph"},
      {"hopf-check", "coproduct, duality, reciprocity and L-coefficient checks"},
  };
  std::map<std::string, CLI::App*> sub;
  for (const auto& c : cmds) {
    auto* s = app.add_subcommand(c.name, c.help);
    common(s);
    sub[c.name] = s;
  }
  for (const char* name : {"compute-f", "compute-fstar", "phi", "tutte", "dual", "split-search", "quotient-project",
                           "hopf-check", "reciprocity-check"}) {
    matroid_opts(sub[name]);
  }
  sub["freedom"]->add_option("--sigma", in.sigma, "0/1 string")->required();
  for (const char* name : {"compute-f", "compute-fstar"}) sub[name]->add_option("--basis", in.basis, "M or L");
  sub["decomp-check"]->add_option("--input", in.file, "certificate JSON file (default: stdin)");
  sub["quotient-project"]->add_option("--qsym", qsym_text, "QSym element, e.g. \"L[1,2] - L[2,1]\"");
  for (const char* name : {"hilbert-basis", "enumerate"}) {
    sub[name]->add_option("--n", in.n, "ground set size")->required();
    sub[name]->add_option("--rank", rank, "rank")->required();
    sub[name]->add_flag("--connected", connected, "connected matroids only");
  }
  matroid_opts(sub["hilbert-basis"], false);
  sub["hilbert-basis"]->add_flag("--weak-images", weak, "use the connected weak images of the given matroid");
  sub["hilbert-basis"]->get_option("--n")->required(false);
  sub["hilbert-basis"]->get_option("--rank")->required(false);
  sub["hilbert-basis"]->add_option("--max-terms", search.max_terms, "largest multiset tried");
  sub["hilbert-basis"]->add_option("--max-nodes", search.max_nodes, "search node budget");
  sub["appendix-lu"]->add_option("--n", in.n, "degree")->required();
  sub["zonotope"]->add_option("--graph", in.graph, "edge list \"n; 1-2, 2-3\"")->required();
  sub["reciprocity-check"]->add_option("--graph", in.graph, "graph instead of a matroid");

  CLI11_PARSE(app, argc, argv);
  const std::string cmd = app.get_subcommands().front()->get_name();

  try {
    const auto opt = options(in);
    GenPermOptions gopt;
    gopt.exec = opt.exec;
    gopt.limits = opt.limits;

    if (cmd == "compute-f" || cmd == "compute-fstar") {
      const Matroid m = load_matroid(in);
      const QSymFn f = change_basis(cmd == "compute-f" ? F(m, opt) : F_star(m, opt), parse_basis(in.basis));
      emit(in, cmd, {{"matroid", matroid_json(m)}, {"basis", in.basis}, {"value", f.str()}}, f.str());
    } else if (cmd == "phi") {
      const Matroid m = load_matroid(in);
      const auto p = phi(m, opt);
      const auto ps = phi_star(m, opt);
      emit(in, cmd, {{"phi", p.str()}, {"phi_star", ps.str()}}, "phi = " + p.str() + "\nphi* = " + ps.str());
    } else if (cmd == "tutte") {
      const auto t = tutte(load_matroid(in));
      emit(in, cmd, {{"tutte", t.str()}}, t.str());
    } else if (cmd == "dual") {
      const Matroid d = dual(load_matroid(in));
      emit(in, cmd, matroid_json(d), d.str());
    } else if (cmd == "freedom") {
      const SigmaString s(in.sigma);
      const Matroid m = freedom_matroid(s);
      const auto ex = freedom_expansion(s, opt);
      ojson terms = ojson::object();
      std::string text = m.str() + "\nF = ";
      bool first = true;
      for (std::size_t i = 0; i < ex.taus.size(); ++i) {
        if (ex.coeffs[i] == 0) continue;
        terms[ex.taus[i].bits()] = ex.coeffs[i].str();
        const Rational& c = ex.coeffs[i];
        const Rational mag = c < 0 ? Rational(-c) : c;
        text += first ? (c < 0 ? "-" : "") : (c < 0 ? " - " : " + ");
        text += (mag == 1 ? std::string() : mag.str() + "*") + "F(R_" + ex.taus[i].bits() + ")";
        first = false;
      }
      text += "\ndiagonal " + ex.diagonal.str() + " expected " + ex.expected_diagonal.str();
      emit(in, cmd,
           {{"matroid", matroid_json(m)},
            {"expansion", terms},
            {"integral", ex.integral},
            {"triangular", ex.triangular},
            {"diagonal", ex.diagonal.str()},
            {"expected_diagonal", ex.expected_diagonal.str()}},
           text);
      if (!ex.ok()) throw VerifyError("freedom expansion is not triangular with the expected diagonal");
    } else if (cmd == "decomp-check") {
      const auto cert = parse_certificate_json(read_source(in));
      const auto v = check_valuation(cert, opt);
      static const char* names[] = {"verified", "invalid", "identity-failure"};
      const std::string status = names[static_cast<int>(v.status)];
      emit(in, cmd, {{"status", status}, {"detail", v.detail}}, status + ": " + v.detail);
      if (v.status == CertificateStatus::Invalid) return 1;
      if (v.status == CertificateStatus::IdentityFailure) return 3;
    } else if (cmd == "split-search") {
      const auto splits = find_hyperplane_splits(load_matroid(in));
      std::string text = std::to_string(splits.size()) + " split(s)";
      for (const auto& s : splits) {
        text += "\nS=" + mask_str(s.s) + " k=" + std::to_string(s.k) + " pieces " +
                std::to_string(s.cert.pieces[0].base_count()) + "+" + std::to_string(s.cert.pieces[1].base_count());
      }
      emit(in, cmd, splits_json(splits), text);
    } else if (cmd == "quotient-project") {
      QuotientVector v;
      std::vector<Composition> basis;
      if (!qsym_text.empty()) {
        const QSymFn f = QSymFn::parse(qsym_text);
        const auto d = f.degree();
        if (!d) throw InvalidInput("--qsym must be homogeneous and nonzero");
        const auto& pres = cached_quotient_presentation(*d);
        v = project_mod_m2(f, pres);
        basis = pres.free_basis;
      } else {
        const Matroid m = load_matroid(in);
        v = barF(m, opt);
        basis = cached_quotient_presentation(m.n()).free_basis;
      }
      auto b = ojson::array();
      for (const auto& a : basis) b.push_back("L" + a.str());
      std::vector<std::string> coords;
      for (const auto& c : v.coords) coords.push_back(c.str());
      std::string text = v.str() + " in basis";
      for (const auto& a : basis) text += " L" + a.str();
      emit(in, cmd, {{"basis", b}, {"coords", coords}}, text);
    } else if (cmd == "hilbert-basis") {
      SemigroupInstance gens;
      if (weak) {
        gens = weak_image_generators(load_matroid(in), opt);
      } else {
        if (in.n < 0 || rank < 0) throw InvalidInput("--n and --rank are required without --weak-images");
        gens = semigroup_of(enumerate_matroids(in.n, rank, connected), opt);
      }
      const auto hb = hilbert_basis(gens, search);
      auto arr = ojson::array();
      std::string text = std::to_string(hb.size()) + " of " + std::to_string(gens.vectors.size()) + " indecomposable";
      for (auto i : hb) {
        arr.push_back({{"label", gens.labels[i]}, {"barF", gens.vectors[i].str()}});
        text += "\n" + gens.labels[i] + " " + gens.vectors[i].str();
      }
      emit(in, cmd, {{"generators", gens.vectors.size()}, {"hilbert_basis", arr}}, text);
    } else if (cmd == "enumerate") {
      const auto ms = enumerate_matroids(in.n, rank, connected);
      auto arr = ojson::array();
      std::string text = std::to_string(ms.size()) + " matroid(s)";
      for (const auto& m : ms) {
        arr.push_back(matroid_json(m));
        text += "\n" + m.str();
      }
      emit(in, cmd, {{"count", ms.size()}, {"matroids", arr}}, text);
    } else if (cmd == "appendix-lu") {
      const auto am = appendix_matrices(in.n);
      std::string sig;
      for (const auto& s : am.sigmas) sig += " " + s.bits();
      std::string comp;
      for (const auto& c : am.compositions) comp += " " + c.str();
      const std::string text = "compositions:" + comp + "\nsigmas:" + sig + "\nA =\n" + matrix_str(am.A) + "\nL =\n" +
                               matrix_str(am.L) + "\nU =\n" + matrix_str(am.U);
      auto rows = [](const IntMatrix& m) {
        auto out = ojson::array();
        for (const auto& r : m) {
          auto row = ojson::array();
          for (const auto& x : r) row.push_back(x.str());
          out.push_back(row);
        }
        return out;
      };
      emit(in, cmd,
           {{"A", rows(am.A)},
            {"L", rows(am.L)},
            {"U", rows(am.U)},
            {"factorizes", am.factorizes()},
            {"triangular", am.triangular()}},
           text);
      if (!am.factorizes() || !am.triangular()) throw VerifyError("A != L U or not unitriangular");
    } else if (cmd == "zonotope") {
      const SimpleGraph g = SimpleGraph::parse(in.graph);
      const QSymFn f = change_basis(graphic_zonotope_F(g, gopt), Basis::Monomial);
      const auto chi = chromatic_polynomial(g);
      const bool ok = chromatic_poly_check(g, -1, gopt);
      std::vector<std::string> cs;
      for (const auto& c : chi) cs.push_back(c.str());
      const std::string p = specialize_ones(f).str();
      emit(in, cmd, {{"graph", g.str()}, {"F", f.str()}, {"phi", p}, {"chromatic_power_coeffs", cs}, {"chromatic_ok", ok}},
           "F = " + f.str() + "\nphi = " + p + "\nchromatic " + (ok ? "ok" : "MISMATCH"));
      if (!ok) throw VerifyError("phi(Z_G) differs from the chromatic polynomial");
    } else if (cmd == "reciprocity-check") {
      IntValuedPoly p, ps;
      bool ok;
      if (!in.graph.empty()) {
        const auto q = graphic_zonotope(SimpleGraph::parse(in.graph));
        p = phi_genperm(q, gopt);
        ps = phi_star_genperm(q, gopt);
        ok = reciprocity_check(q, gopt);
      } else {
        const Matroid m = load_matroid(in);
        p = phi(m, opt);
        ps = phi_star(m, opt);
        ok = check_reciprocity(m, opt);
      }
      emit(in, cmd, {{"phi", p.str()}, {"phi_star", ps.str()}, {"ok", ok}},
           "phi = " + p.str() + "\nphi* = " + ps.str() + "\nreciprocity " + (ok ? "ok" : "FAILED"));
      if (!ok) throw VerifyError("reciprocity fails");
    } else if (cmd == "hopf-check") {
      const Matroid m = load_matroid(in);
      const bool coalg = check_coalgebra_map(m, opt);
      const bool dual_ok = check_duality(m, opt);
      const bool recip = check_reciprocity(m, opt);
      const auto rep = check_L_coefficients(m, opt);
      const bool ok = coalg && dual_ok && recip && rep.ok();
      auto yn = [](bool b) { return std::string(b ? "ok" : "FAILED"); };
      emit(in, cmd,
           {{"coproduct", coalg}, {"duality", dual_ok}, {"reciprocity", recip}, {"L_coefficients", rep.str()}, {"ok", ok}},
           "coproduct " + yn(coalg) + "\nduality " + yn(dual_ok) + "\nreciprocity " + yn(recip) + "\nL-coefficients " +
               rep.str());
      if (!ok) throw VerifyError("Hopf checks failed");
    }
  } catch (const InvalidInput& e) {
    std::cerr << "invalid input: " << e.what() << "\n";
    return 1;
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 2;
  } catch (const VerificationFailed& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 3;
  } catch (const VerifyError& e) {
    std::cerr << "verification failed: " << e.what() << "\n";
    return 3;
  }
  return 0;
}
