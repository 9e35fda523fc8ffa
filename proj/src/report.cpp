#include "hodge/report.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

namespace hodge {

namespace {

// Tokens of one line with their 1-based starting columns.
std::vector<std::pair<std::string, std::size_t>> tokens_of(const std::string& line) {
  std::vector<std::pair<std::string, std::size_t>> out;
  std::size_t i = 0;
  while (i < line.size()) {
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    if (line[i] == '[' || line[i] == ']') {
      out.push_back({std::string(1, line[i]), i + 1});
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j])) &&
           line[j] != '[' && line[j] != ']')
      ++j;
    out.push_back({line.substr(i, j - i), i + 1});
    i = j;
  }
  return out;
}

[[noreturn]] void fail(int lineno, std::size_t col, const std::string& msg) {
  throw ParseError(col, "line " + std::to_string(lineno) + ": " + msg);
}

int parse_int(const std::string& t, int lineno, std::size_t col) {
  try {
    std::size_t used = 0;
    int v = std::stoi(t, &used);
    if (used != t.size()) fail(lineno, col, "trailing characters in integer '" + t + "'");
    return v;
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception&) {
    fail(lineno, col, "expected an integer, got '" + t + "'");
  }
}

std::string strip_parse_prefix(const std::string& what) {
  const std::string tag = ": ";
  std::size_t p = what.find(tag);
  return p == std::string::npos ? what : what.substr(p + tag.size());
}

nlohmann::ordered_json json_of_rational(const Rational& q) { return q.str(); }

}  // namespace

DatumFile parse_datum_text(const std::string& text) {
  DatumFile out;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokens_of(line);
    if (toks.empty() || toks[0].first[0] == '#') continue;
    const std::string& head = toks[0].first;
    if (head == "ring:") {
      if (out.ring) fail(lineno, toks[0].second, "duplicate ring line");
      std::vector<std::string> names;
      std::vector<int> weights;
      std::size_t i = 1;
      for (; i < toks.size() && toks[i].first != "["; ++i) {
        for (const std::string& prev : names)
          if (prev == toks[i].first)
            fail(lineno, toks[i].second, "duplicate variable name '" + toks[i].first + "'");
        names.push_back(toks[i].first);
      }
      if (names.empty()) fail(lineno, toks[0].second, "ring line lists no variables");
      if (i < toks.size()) {
        ++i;  // past '['
        for (; i < toks.size() && toks[i].first != "]"; ++i) {
          int w = parse_int(toks[i].first, lineno, toks[i].second);
          if (w < 1) fail(lineno, toks[i].second, "weights must be positive");
          weights.push_back(w);
        }
        if (i == toks.size()) fail(lineno, toks.back().second, "unterminated weight list");
        if (i + 1 != toks.size()) fail(lineno, toks[i + 1].second, "text after weight list");
        if (weights.size() != names.size())
          fail(lineno, toks[0].second,
               std::to_string(names.size()) + " variables but " +
                   std::to_string(weights.size()) + " weights");
      }
      if (static_cast<int>(names.size()) > kMaxVars)
        fail(lineno, toks[0].second, "more than " + std::to_string(kMaxVars) + " variables");
      out.ring = RingCtx::make(std::move(names), std::move(weights));
      continue;
    }
    if (head == "k:" || head == "d:" || head == "c:") {
      if (toks.size() != 2) fail(lineno, toks[0].second, "expected '" + head + " <integer>'");
      int v = parse_int(toks[1].first, lineno, toks[1].second);
      auto& slot = head == "k:" ? out.k : head == "d:" ? out.d : out.c;
      if (slot) fail(lineno, toks[0].second, "duplicate header " + head);
      slot = v;
      continue;
    }
    if (head == "gen:") {
      if (!out.ring) fail(lineno, toks[0].second, "gen line before ring line");
      std::size_t start = line.find("gen:") + 4;
      std::string body = line.substr(start);
      if (body.find_first_not_of(" \t") == std::string::npos)
        fail(lineno, toks[0].second, "empty generator");
      try {
        out.gens.push_back(parse_polynomial(out.ring, body));
      } catch (const ParseError& e) {
        fail(lineno, start + e.pos, strip_parse_prefix(e.what()));
      }
      continue;
    }
    fail(lineno, toks[0].second, "unknown directive '" + head + "'");
  }
  if (!out.ring) throw ParseError(1, "line 1: missing ring line");
  return out;
}

DatumFile load_datum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(1, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_datum_text(buf.str());
}

nlohmann::ordered_json json_of_certificate(const RankCertificate& cert) {
  nlohmann::ordered_json j;
  j["rank"] = cert.rank;
  j["leftKernelDim"] = cert.leftKernelDim;
  j["det"] = cert.det ? json_of_rational(*cert.det) : nlohmann::ordered_json(nullptr);
  return j;
}

nlohmann::ordered_json json_of_unipoly(const UniPoly& p) {
  nlohmann::ordered_json j;
  j["degree"] = p.degree();
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (int i = 0; i <= p.degree(); ++i) coeffs.push_back(json_of_rational(p.coeff(i)));
  j["coeffs"] = std::move(coeffs);
  j["display"] = p.str("t");
  return j;
}

nlohmann::ordered_json json_of_pencil(const PencilReport& pr) {
  nlohmann::ordered_json j;
  j["degree"] = pr.degree;
  j["socleDegree"] = pr.socleDegree;
  j["dimLeft"] = pr.dimLeft;
  j["dimRight"] = pr.dimRight;
  j["genericRank"] = pr.genericRank;
  j["rankAtZero"] = pr.rankAtZero;
  j["rankAtInfinity"] = pr.rankAtInfinity;
  j["proportional"] = pr.proportional;
  j["detIsDeterminant"] = pr.detIsDeterminant;
  j["detPoly"] = json_of_unipoly(pr.detPoly);
  nlohmann::ordered_json drops = nlohmann::ordered_json::array();
  for (const PencilDrop& d : pr.dropValues) {
    nlohmann::ordered_json e;
    e["value"] = json_of_rational(d.value);
    e["rank"] = d.rankAt;
    e["multiplicity"] = d.multiplicity;
    drops.push_back(std::move(e));
  }
  j["dropValues"] = std::move(drops);
  j["residualDegree"] = pr.residualDegree;
  j["residualRealRoots"] = pr.residualRealRoots;
  j["rootSearchComplete"] = pr.rootSearchComplete;
  j["subquotientKernel1"] = pr.subquotientKernel1;
  j["subquotientKernel2"] = pr.subquotientKernel2;
  j["kernelsVanish"] = pr.kernelsVanish;
  j["dropBound"] = pr.dropBound;
  j["boundApplies"] = pr.boundApplies;
  return j;
}

nlohmann::ordered_json json_of_scenario(const ScenarioReport& rep) {
  nlohmann::ordered_json j;
  j["name"] = rep.name;
  j["k"] = rep.k;
  j["d"] = rep.d;
  j["c"] = rep.c;
  j["status"] = rep.status;
  j["allChecksHold"] = rep.all_checks_hold();
  nlohmann::ordered_json checks = nlohmann::ordered_json::array();
  for (const IdentityCheck& ch : rep.identityChecks) {
    nlohmann::ordered_json e;
    e["label"] = ch.label;
    e["mode"] = ch.mode;
    e["holds"] = ch.holds;
    checks.push_back(std::move(e));
  }
  j["checks"] = std::move(checks);
  if (rep.smoothOk) j["smooth"] = *rep.smoothOk;
  nlohmann::ordered_json qty = nlohmann::ordered_json::object();
  for (const auto& [key, value] : rep.quantities) qty[key] = value;
  j["quantities"] = std::move(qty);
  nlohmann::ordered_json table = nlohmann::ordered_json::array();
  for (const auto& [deg, row] : rep.hilbertTable) {
    nlohmann::ordered_json e;
    e["degree"] = deg;
    e["h1"] = row.h1;
    e["h2"] = row.h2;
    e["hsum"] = row.hsum;
    e["hint"] = row.hint;
    table.push_back(std::move(e));
  }
  j["hilbertTable"] = std::move(table);
  if (rep.pairingResult) j["pairing"] = json_of_certificate(*rep.pairingResult);
  if (rep.pencilResult) j["pencil"] = json_of_pencil(*rep.pencilResult);
  return j;
}

std::string text_of_pencil(const PencilReport& pr) {
  std::ostringstream os;
  os << "pencil " << pr.dimLeft << "x" << pr.dimRight << " at degree " << pr.degree
     << " (socle " << pr.socleDegree << ")\n";
  os << "  generic rank " << pr.genericRank << ", rank at 0: " << pr.rankAtZero
     << ", rank at infinity: " << pr.rankAtInfinity << "\n";
  os << "  " << (pr.detIsDeterminant ? "determinant" : "certifying minor") << ": "
     << pr.detPoly.str("t") << "\n";
  if (pr.proportional) os << "  forms are proportional\n";
  for (const PencilDrop& d : pr.dropValues)
    os << "  drop at t = " << d.value.str() << ": rank " << d.rankAt << " (multiplicity "
       << d.multiplicity << ")\n";
  os << "  residual factor degree " << pr.residualDegree << " with " << pr.residualRealRoots
     << " real roots; rational root search "
     << (pr.rootSearchComplete ? "complete" : "incomplete") << "\n";
  os << "  subquotient kernels " << pr.subquotientKernel1 << " and " << pr.subquotientKernel2;
  if (pr.boundApplies)
    os << "; at most " << pr.dropBound << " nonzero drop values\n";
  else
    os << "; drop-count bound not applicable\n";
  return os.str();
}

std::string text_of_scenario(const ScenarioReport& rep) {
  std::ostringstream os;
  os << "scenario " << rep.name << " (k=" << rep.k << " d=" << rep.d << " c=" << rep.c
     << "): " << rep.status << "\n";
  if (rep.status != "ok") return os.str();
  for (const IdentityCheck& ch : rep.identityChecks)
    os << "  check " << ch.label << " [" << ch.mode << "] "
       << (ch.holds ? "ok" : "FAILED") << "\n";
  if (rep.smoothOk) os << "  smooth: " << (*rep.smoothOk ? "yes" : "NO") << "\n";
  for (const auto& [key, value] : rep.quantities)
    os << "  " << key << " = " << value << "\n";
  if (rep.pairingResult) {
    const RankCertificate& cert = *rep.pairingResult;
    os << "  pairing rank " << cert.rank << ", left kernel " << cert.leftKernelDim;
    if (cert.det) os << ", det " << cert.det->str();
    os << "\n";
  }
  if (rep.pencilResult) os << text_of_pencil(*rep.pencilResult);
  if (!rep.hilbertTable.empty()) {
    os << "  degree: h1 h2 hsum hint\n";
    for (const auto& [deg, row] : rep.hilbertTable)
      os << "  " << deg << ": " << row.h1 << " " << row.h2 << " " << row.hsum << " "
         << row.hint << "\n";
  }
  return os.str();
}

}  // namespace hodge
