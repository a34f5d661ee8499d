#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "frieze/legendrian.hpp"
#include "frieze/slfrieze.hpp"
#include "frieze/symplectic.hpp"

namespace frieze::cli {

using Json = nlohmann::ordered_json;

// A check on loaded data failed; maps to exit code 1.
class VerificationFailure : public Error {
 public:
  using Error::Error;
};

struct FriezeDocument {
  FriezeGrid grid;
  std::optional<Coeffs> coeffs;
};

// Canonical JSON: entries of one fundamental domain keyed "I,J" (doubled indices).
Json frieze_to_json(const FriezeGrid& g, const std::optional<Coeffs>& coeffs = std::nullopt);
FriezeDocument frieze_from_json(const Json& j);

// Rows 0..w-1 over columns x0..x0+2n-1, '*' prefix on black entries.
std::string render_text(const FriezeGrid& g, int x0 = 0);
FriezeGrid parse_text(std::string_view text);

// JSON when the first non-blank character is '{', text otherwise.
FriezeDocument parse_frieze(std::string_view text);
// Throws VerificationFailure naming the first violated local rule.
void require_local_rules(const FriezeGrid& g);

Json parse_json(std::string_view text);
std::vector<Scalar> parse_list(std::string_view text, ScalarKind kind);
std::string join(const std::vector<Scalar>& v, const char* sep = ",");

Json scalars_to_json(const std::vector<Scalar>& v);
std::vector<Scalar> scalars_from_json(const Json& j, ScalarKind kind);
Json matrix_to_json(const Matrix& m);

Json sl_to_json(const SLFrieze& f);
SLFrieze sl_from_json(const Json& j);
std::string render_sl(const SLFrieze& f);

Json polygon_to_json(const Polygon& p);
Polygon polygon_from_json(const Json& j);

std::string index_str(GridIndex g);

}  // namespace frieze::cli
