#pragma once

#include <json.hpp>

#include "liecurrent/bd.hpp"
#include "liecurrent/lie_algebra.hpp"
#include "liecurrent/loop_double.hpp"
#include "liecurrent/rmatrix.hpp"
#include "liecurrent/trace_ext.hpp"

namespace liecurrent {

using Json = nlohmann::ordered_json;

Json to_json(const CheckEntry& c);
Json to_json(const ManinReport& r);
Json to_json(const CYBEReport& r, const LieAlgebraData& g);
Json to_json(const BDTriple& t);
Json to_json(const std::vector<BDTriple>& ts);
Json to_json(const DualBasisReport& r);

/// Algebra export: type, labels, structure constants as (i, j, k, "p/q")
/// quadruples, and both Gram matrices with "p/q" entries.
Json algebra_to_json(const LieAlgebraData& g);
LieAlgebraData algebra_from_json(const Json& j);

/// r-matrix export: numerator terms as (i, j, dx, dy, "p/q"), the
/// denominator power, and the twist in the same shape.
Json rmatrix_to_json(const RationalR& r, const std::string& case_name);
RationalR rmatrix_from_json(const Json& j);

Json fdata_to_json(const FData& d);
FData fdata_from_json(const Json& j, int dim);

/// Trace extension serialization: {kind, n, depth, alpha: ["p/q", ...]}.
Json trace_ext_to_json(const TraceExtension& e);
TraceExtension trace_ext_from_json(const Json& j);

/// Canonical rendering used everywhere: two-space indentation, ordered
/// fields, trailing newline. Parsing and re-rendering is byte-identical.
std::string render_json(const Json& j);

}  // namespace liecurrent
