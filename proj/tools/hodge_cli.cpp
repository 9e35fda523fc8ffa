#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hodge/cycles.hpp"
#include "hodge/pairing.hpp"
#include "hodge/report.hpp"
#include "hodge/scenarios.hpp"

using namespace hodge;
using nlohmann::ordered_json;

namespace {

struct Output {
  std::string format = "text";
  std::string outPath;

  void emit(const std::string& opName, const ordered_json& section,
            const std::string& text) const {
    std::string payload;
    if (format == "json") {
      ordered_json doc;
      doc[opName] = section;
      payload = doc.dump(2) + "\n";
    } else {
      payload = text;
    }
    if (outPath.empty()) {
      std::cout << payload;
    } else {
      std::ofstream out(outPath);
      if (!out) throw Error("cannot write '" + outPath + "'");
      out << payload;
    }
  }
};

MonomialOrder order_from_name(const std::string& name) {
  if (name == "degrevlex") return MonomialOrder::degrevlex();
  if (name == "lex") return MonomialOrder::lex();
  if (name.rfind("block:", 0) == 0)
    return MonomialOrder::block(std::stoi(name.substr(6)));
  throw Error("unknown order '" + name + "' (degrevlex, lex, block:<start>)");
}

// Two datum files must describe the same ring; the second file's generators
// are carried into the first file's ring object so the algebra can combine
// them (ring identity is by object).
std::vector<Polynomial> into_ring(const DatumFile& host, const DatumFile& guest) {
  const Ring& a = host.ring;
  const Ring& b = guest.ring;
  bool same = a->nvars() == b->nvars();
  for (int i = 0; same && i < a->nvars(); ++i)
    same = a->var_name(i) == b->var_name(i) && a->weight(i) == b->weight(i);
  if (!same) throw Error("the two input files declare different rings");
  std::vector<Polynomial> images;
  for (int i = 0; i < a->nvars(); ++i)
    images.push_back(Polynomial::variable(a, i));
  std::vector<Polynomial> out;
  for (const Polynomial& g : guest.gens) out.push_back(substitute(g, a, images));
  return out;
}

std::string ring_display(const Ring& r) {
  std::string s;
  for (int i = 0; i < r->nvars(); ++i) {
    if (i) s += " ";
    s += r->var_name(i);
  }
  if (!r->all_weights_one()) {
    s += " [";
    for (int i = 0; i < r->nvars(); ++i) {
      if (i) s += " ";
      s += std::to_string(r->weight(i));
    }
    s += "]";
  }
  return s;
}

int run_hilbert(const std::string& path, int from, std::optional<int> to,
                std::optional<int> maxDegree, const Output& out) {
  DatumFile file = load_datum_file(path);
  GradedQuotient q = GradedQuotient::make(Ideal::make(file.ring, file.gens));
  int hi;
  if (to) {
    hi = *to;
  } else if (maxDegree) {
    hi = *maxDegree;
  } else {
    check(q.artinian(),
          "quotient is not finite dimensional; give --to or --max-degree");
    hi = q.socle_degree().value_or(0);
  }
  check(from >= 0 && hi >= from, "empty degree range");
  ordered_json section;
  section["ring"] = ring_display(file.ring);
  section["from"] = from;
  section["to"] = hi;
  ordered_json values = ordered_json::array();
  std::ostringstream text;
  text << "hilbert function of S/I, S = Q[" << ring_display(file.ring) << "]\n";
  for (int e = from; e <= hi; ++e) {
    int h = q.hilbert(e);
    ordered_json row;
    row["degree"] = e;
    row["h"] = h;
    values.push_back(std::move(row));
    text << "  h(" << e << ") = " << h << "\n";
  }
  section["values"] = std::move(values);
  out.emit("hilbert", section, text.str());
  return 0;
}

int run_groebner(const std::string& path, const std::string& orderName,
                 std::optional<int> maxDegree, const Output& out) {
  DatumFile file = load_datum_file(path);
  MonomialOrder order = order_from_name(orderName);
  Ideal ideal = Ideal::make(file.ring, file.gens);
  std::optional<int> cap;
  if (maxDegree) cap = *maxDegree;
  const GroebnerBasis& gb = ideal.basis(order, cap);
  ordered_json section;
  section["order"] = order.str();
  if (cap) section["cap"] = *cap;
  section["size"] = gb.elems.size();
  ordered_json elems = ordered_json::array();
  std::ostringstream text;
  text << "reduced basis (" << order.str() << "), " << gb.elems.size() << " elements\n";
  for (const Polynomial& p : gb.elems) {
    elems.push_back(p.str());
    text << "  " << p.str() << "\n";
  }
  section["basis"] = std::move(elems);
  out.emit("groebner", section, text.str());
  return 0;
}

int run_nf(const std::string& path, const std::string& polyText, const Output& out) {
  DatumFile file = load_datum_file(path);
  Polynomial p = parse_polynomial(file.ring, polyText);
  Ideal ideal = Ideal::make(file.ring, file.gens);
  Polynomial r = normal_form(p, ideal.basis());
  ordered_json section;
  section["input"] = p.str();
  section["normalForm"] = r.str();
  section["isZero"] = r.is_zero();
  std::ostringstream text;
  text << "normal form of " << p.str() << ":\n  " << r.str() << "\n";
  out.emit("nf", section, text.str());
  return 0;
}

int run_kbase(const std::string& path, int degree, const Output& out) {
  DatumFile file = load_datum_file(path);
  GradedQuotient q = GradedQuotient::make(Ideal::make(file.ring, file.gens));
  std::vector<Monomial> basis = q.kbase(degree);
  ordered_json section;
  section["degree"] = degree;
  section["count"] = basis.size();
  ordered_json elems = ordered_json::array();
  std::ostringstream text;
  text << basis.size() << " standard monomials in degree " << degree << "\n";
  for (const Monomial& m : basis) {
    elems.push_back(m.str(*file.ring));
    text << "  " << m.str(*file.ring) << "\n";
  }
  section["monomials"] = std::move(elems);
  out.emit("kbase", section, text.str());
  return 0;
}

int run_gram(const std::string& sumPath, const std::string& partPath, int degree,
             const Output& out) {
  DatumFile sumFile = load_datum_file(sumPath);
  DatumFile partFile = load_datum_file(partPath);
  Ideal isum = Ideal::make(sumFile.ring, sumFile.gens);
  Ideal ipart = Ideal::make(sumFile.ring, into_ring(sumFile, partFile));
  GradedQuotient part = GradedQuotient::make(ipart);
  std::optional<int> socle = part.socle_degree();
  check(socle.has_value(), "the second ideal must give a nonzero Artinian quotient");
  std::vector<Polynomial> left = build_subquotient_basis(isum, part, degree);
  std::vector<Polynomial> right = build_subquotient_basis(isum, part, *socle - degree);
  GramPairing gp = gram_matrix(part, std::move(left), std::move(right));
  RankCertificate cert = full_rank_certificate(gp);
  ordered_json section;
  section["degree"] = degree;
  section["socleDegree"] = *socle;
  section["dimLeft"] = gp.left.size();
  section["dimRight"] = gp.right.size();
  ordered_json certJson = json_of_certificate(cert);
  for (auto& [key, value] : certJson.items()) section[key] = value;
  std::ostringstream text;
  text << "socle pairing in degrees " << degree << " x " << (*socle - degree) << ": "
       << gp.left.size() << " x " << gp.right.size() << "\n";
  text << "  rank " << cert.rank << ", left kernel " << cert.leftKernelDim;
  if (cert.det) text << ", det " << cert.det->str();
  text << "\n";
  out.emit("gram", section, text.str());
  return 0;
}

int run_pencil(const std::string& path1, const std::string& path2,
               std::optional<int> degree, const Output& out) {
  DatumFile f1 = load_datum_file(path1);
  DatumFile f2 = load_datum_file(path2);
  Ideal i1 = Ideal::make(f1.ring, f1.gens);
  Ideal i2 = Ideal::make(f1.ring, into_ring(f1, f2));
  int d = degree ? *degree : f1.d.value_or(0);
  check(d > 0, "give --degree or a d: header in the first file");
  PencilReport pr = pencil_analysis(i1, i2, d);
  out.emit("pencil", json_of_pencil(pr), text_of_pencil(pr));
  return 0;
}

int run_classify(int d, int c, int k, const Output& out) {
  RegimeClassification rc = classify_regime(d, c, k);
  ordered_json section;
  section["d"] = rc.d;
  section["c"] = rc.c;
  section["k"] = rc.k;
  section["regime"] = regime_name(rc.regime);
  section["hSumAtTop"] = rc.hSumAtTop.str();
  std::ostringstream text;
  text << "d=" << rc.d << " c=" << rc.c << " k=" << rc.k << ": " << regime_name(rc.regime)
       << ", hSumAtTop " << rc.hSumAtTop.str() << "\n";
  out.emit("classify", section, text.str());
  return 0;
}

int run_smooth_check(const std::string& path, const Output& out) {
  DatumFile file = load_datum_file(path);
  check(file.gens.size() == 1, "smooth-check expects exactly one gen: line");
  const Polynomial& f = file.gens[0];
  bool smooth = hypersurface_smooth(f);
  ordered_json section;
  section["variables"] = file.ring->nvars();
  section["degree"] = f.degree();
  section["smooth"] = smooth;
  std::ostringstream text;
  text << "V(f) in " << file.ring->nvars() << " variables, degree " << f.degree() << ": "
       << (smooth ? "smooth" : "singular") << "\n";
  out.emit("smooth-check", section, text.str());
  return 0;
}

int run_codim(int k, int d, int c, const Output& out) {
  SmoothnessReport sr = smoothness_codim_report(k, d, c);
  BigInt lhs = sr.familyDim + sr.tangentCodim;
  if (!(lhs == sr.containmentCodim))
    throw Error("codim identity failed: familyDim + tangentCodim = " + lhs.str() +
                " but containmentCodim = " + sr.containmentCodim.str());
  ordered_json section;
  section["k"] = sr.k;
  section["d"] = sr.d;
  section["c"] = sr.c;
  section["familyDim"] = sr.familyDim.str();
  section["containmentCodim"] = sr.containmentCodim.str();
  section["tangentCodim"] = sr.tangentCodim.str();
  section["identityHolds"] = true;
  std::ostringstream text;
  text << "k=" << sr.k << " d=" << sr.d << " c=" << sr.c << "\n"
       << "  family dimension      " << sr.familyDim.str() << "\n"
       << "  containment codim     " << sr.containmentCodim.str() << "\n"
       << "  tangent codim         " << sr.tangentCodim.str() << "\n"
       << "  familyDim + tangentCodim = containmentCodim holds\n";
  out.emit("codim", section, text.str());
  return 0;
}

int run_scenario_cmd(const std::string& name, const ScenarioOptions& opts,
                     const Output& out) {
  ScenarioReport rep = run_scenario(name, opts);
  out.emit("scenario", json_of_scenario(rep), text_of_scenario(rep));
  if (!rep.all_checks_hold()) {
    for (const IdentityCheck& ch : rep.identityChecks)
      if (!ch.holds) std::cerr << "failed check: " << ch.label << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact computations with graded ideals and socle pairings"};
  app.require_subcommand(1);
  app.fallthrough();

  Output out;
  std::uint64_t seed = 1;
  std::optional<int> maxDegree;
  std::optional<int> budget;
  app.add_option("--format", out.format, "output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--seed", seed, "random seed for generated instances");
  app.add_option("--max-degree", maxDegree, "degree cap for tables and capped bases");
  app.add_option("--budget", budget, "variable budget for specialized instances");
  app.add_option("--out", out.outPath, "write the report to this file");

  std::string path, path2, polyText, orderName = "degrevlex";
  int from = 0, degree = 0, pk = 0, pd = 0, pc = 0;
  std::optional<int> to, pencilDegree;

  CLI::App* hilbert = app.add_subcommand("hilbert", "Hilbert function of S/I");
  hilbert->add_option("file", path, "ideal file")->required();
  hilbert->add_option("--from", from, "first degree");
  hilbert->add_option("--to", to, "last degree");

  CLI::App* groebner = app.add_subcommand("groebner", "reduced basis of an ideal");
  groebner->add_option("file", path, "ideal file")->required();
  groebner->add_option("--order", orderName, "degrevlex, lex, or block:<start>");

  CLI::App* nf = app.add_subcommand("nf", "normal form of a polynomial");
  nf->add_option("file", path, "ideal file")->required();
  nf->add_option("poly", polyText, "polynomial to reduce")->required();

  CLI::App* kbase = app.add_subcommand("kbase", "standard monomials in one degree");
  kbase->add_option("file", path, "ideal file")->required();
  kbase->add_option("--degree", degree, "degree")->required();

  CLI::App* gram = app.add_subcommand("gram", "socle pairing of a subquotient");
  gram->add_option("sumfile", path, "ideal file for the numerator ideal")->required();
  gram->add_option("partfile", path2, "ideal file for the Artinian quotient")->required();
  gram->add_option("--degree", degree, "left degree")->required();

  CLI::App* pencil = app.add_subcommand("pencil", "rank analysis of a pairing pencil");
  pencil->add_option("file1", path, "first ideal file")->required();
  pencil->add_option("file2", path2, "second ideal file")->required();
  pencil->add_option("--degree", pencilDegree, "left degree (default: d: header)");

  CLI::App* classify = app.add_subcommand("classify", "kernel regime of (d, c, k)");
  classify->add_option("d", pd, "degree")->required();
  classify->add_option("c", pc, "codimension")->required();
  classify->add_option("k", pk, "plane dimension")->required();

  CLI::App* smooth = app.add_subcommand("smooth-check", "smoothness of a hypersurface");
  smooth->add_option("file", path, "file with one gen: line")->required();

  CLI::App* codim = app.add_subcommand("codim", "codimension count for plane pairs");
  codim->add_option("k", pk, "plane dimension")->required();
  codim->add_option("d", pd, "degree")->required();
  codim->add_option("c", pc, "codimension")->required();

  std::string scenarioName, liftBase = "fermat";
  int sd = 3, sc = 2, sk = 5, steps = 1;
  bool noPencil = false;
  CLI::App* scenario = app.add_subcommand("scenario", "run a named scenario");
  scenario->add_option("name", scenarioName, "scenario name")->required();
  scenario->add_option("--d", sd, "degree parameter");
  scenario->add_option("--c", sc, "codimension parameter");
  scenario->add_option("--k", sk, "plane dimension parameter");
  scenario->add_option("--base", liftBase, "base scenario for lift");
  scenario->add_option("--steps", steps, "lift steps");
  scenario->add_flag("--no-pencil", noPencil, "skip the pencil analysis");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  try {
    if (hilbert->parsed()) return run_hilbert(path, from, to, maxDegree, out);
    if (groebner->parsed()) return run_groebner(path, orderName, maxDegree, out);
    if (nf->parsed()) return run_nf(path, polyText, out);
    if (kbase->parsed()) return run_kbase(path, degree, out);
    if (gram->parsed()) return run_gram(path, path2, degree, out);
    if (pencil->parsed()) return run_pencil(path, path2, pencilDegree, out);
    if (classify->parsed()) return run_classify(pd, pc, pk, out);
    if (smooth->parsed()) return run_smooth_check(path, out);
    if (codim->parsed()) return run_codim(pk, pd, pc, out);
    if (scenario->parsed()) {
      ScenarioOptions opts;
      opts.seed = seed;
      if (maxDegree) opts.maxDegree = *maxDegree;
      if (budget) opts.varBudget = *budget;
      opts.d = sd;
      opts.c = sc;
      opts.k = sk;
      opts.liftBase = liftBase;
      opts.liftSteps = steps;
      opts.runPencil = !noPencil;
      return run_scenario_cmd(scenarioName, opts, out);
    }
  } catch (const ParseError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    std::cerr << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return 1;
  }
  return 0;
}
