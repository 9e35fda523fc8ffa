#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hodge/pairing.hpp"
#include "hodge/parser.hpp"
#include "hodge/scenarios.hpp"

#include <json.hpp>

namespace hodge {

// One ideal (or hypersurface) datum in the plain-text format used by every
// subcommand:
//   ring: x0 x1 x2 [1 1 2]      weight list optional, defaults to all 1
//   k: 3   d: 4   c: 2          optional integer headers, any order
//   gen: x0^2*x1 - 3*x2
// Blank lines and lines starting with # are skipped. Errors carry the line
// number and the 1-based column of the offending token.
struct DatumFile {
  Ring ring;
  std::vector<Polynomial> gens;
  std::optional<int> k, d, c;
};

DatumFile parse_datum_text(const std::string& text);
DatumFile load_datum_file(const std::string& path);

// Structured (JSON) views. Exact values are serialized as decimal strings,
// "p" or "p/q"; nothing is rounded.
nlohmann::ordered_json json_of_certificate(const RankCertificate& cert);
nlohmann::ordered_json json_of_unipoly(const UniPoly& p);
nlohmann::ordered_json json_of_pencil(const PencilReport& pr);
nlohmann::ordered_json json_of_scenario(const ScenarioReport& rep);

// Human-readable views of the same data.
std::string text_of_pencil(const PencilReport& pr);
std::string text_of_scenario(const ScenarioReport& rep);

}  // namespace hodge
