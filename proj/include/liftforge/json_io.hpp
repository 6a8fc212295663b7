#pragma once
// JSON interchange. Rationals are {"num": "p", "den": "q"} with decimal
// strings; on input a "p/q" string or a JSON integer is also accepted.
// Polynomials are {"terms": [{"n": n, "num": .., "den": ..}]} in ascending n,
// where n is the exponent of z^-n.
#include <string>
#include <string_view>

#include <json.hpp>

#include "liftforge/factor.hpp"

namespace liftforge {

using Json = nlohmann::ordered_json;

/// Parses text, reporting syntax errors as ParseError with line and column.
Json parse_json(std::string_view text, std::string_view source = "input");
Json load_json_file(const std::string& path);

Json to_json(const Rational& r);
Json to_json(const LaurentPoly& p);
Json to_json(const PolyMatrix& m);  // {"h0", "h1", "matrix"}
Json to_json(const Cascade& c);
Json to_json(const Signal& s);
Json to_json(const Subbands& b, const Signal& source_shape);
Json to_json(const MembershipReport& r);
Json to_json(const RadiusTrace& t);
Json to_json(const FactorResult& r, std::string_view normalization);

// Readers take the JSON path used in diagnostics.
Rational rational_from_json(const Json& j, const std::string& path = "$");
LaurentPoly poly_from_json(const Json& j, const std::string& path = "$");
/// {"h0", "h1"} scalar filters, or {"matrix": [[p, p], [p, p]]}.
PolyMatrix bank_from_json(const Json& j, const std::string& path = "$");
/// {"K", "steps": [{"m", "s"}], "base"}, base optional (identity); base may be
/// "identity", a matrix or a bank object.
Cascade cascade_from_json(const Json& j, const std::string& path = "$");
Signal signal_from_json(const Json& j, const std::string& path = "$");
/// {"lowband", "highband", "signal_start", "signal_length"}. The shape is
/// returned in `shape` (samples zero-filled) for trimming the synthesis.
Subbands bands_from_json(const Json& j, Signal& shape, const std::string& path = "$");

}  // namespace liftforge
