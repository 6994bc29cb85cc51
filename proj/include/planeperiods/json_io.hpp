#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "planeperiods/monomial.hpp"
#include "planeperiods/periods.hpp"

namespace planeperiods {

using Json = nlohmann::ordered_json;

/// Deterministic text: keys in insertion order, two-space indentation,
/// floating point as %.17g (round-trips every double).
std::string dump_canonical(const Json& doc);

Json to_json(cplx z);                          // [re, im]
Json to_json(const ComplexMatrix& m);          // rows of [re, im]
Json to_json(const std::vector<Monomial>& ms); // labels as strings

cplx complex_from_json(const Json& j);
ComplexMatrix matrix_from_json(const Json& j);
std::vector<Monomial> monomials_from_json(const Json& j);

/// Reads a whole file; throws FormatError when it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace planeperiods
