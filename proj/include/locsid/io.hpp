#pragma once

#include <string>

#include <json.hpp>

#include "locsid/bigraph.hpp"
#include "locsid/kernel.hpp"
#include "locsid/plain_graph.hpp"
#include "locsid/scalar.hpp"

namespace locsid {

/// Insertion-ordered, so serialized output is stable.
using Json = nlohmann::ordered_json;

/// Throws ParseError carrying the byte offset of the first syntax error.
Json parse_json(const std::string& text);
Json read_json_file(const std::string& path);
/// Two-space indented with a trailing newline.
std::string dump_json(const Json& j);

Json to_json(const Rational& x);
/// Accepts "p/q" strings, decimal strings, integers and (exactly) doubles.
Rational rational_from_json(const Json& j);

/// {"first": [ids], "second": [ids], "edges": [[u, v], ...], "labels": {"1": id, ...}}
Json graph_to_json(const Bigraph& f);
/// Accepts the format above or {"n": N, "edges": [...]} (sides found by
/// 2-coloring, node 0 first). Ids that are not exactly 0..n-1 are
/// renumbered in increasing order.
Bigraph graph_from_json(const Json& j);

Json plain_graph_to_json(const PlainGraph& g);
/// Accepts {"n": N, "edges": [...]} or the bigraph format (sides dropped).
PlainGraph plain_graph_from_json(const Json& j);

/// {"row_measures": [...], "col_measures": [...], "values": [[...]], "mode": ...}
Json kernel_to_json(const RationalKernel& k);
Json kernel_to_json(const FloatKernel& k);
/// "rational" unless the file says "float".
std::string kernel_mode(const Json& j);
RationalKernel rational_kernel_from_json(const Json& j);
FloatKernel float_kernel_from_json(const Json& j);

}  // namespace locsid
