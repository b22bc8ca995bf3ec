#pragma once

#include "fishlab/matrices.hpp"
#include "fishlab/permutations.hpp"
#include "fishlab/posets.hpp"
#include "fishlab/sequences.hpp"

#include <json.hpp>

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace fishlab::io {

using Json = nlohmann::ordered_json;

/// "0 0 2 1 4 3"
std::string format_line(std::span<const int> values);

/// Parses whitespace-separated integers. Throws InputError on anything else.
std::vector<int> parse_line(const std::string& line);

/// One row per line, space separated; no trailing blank line.
std::string format_matrix(const TriMatrix& a);

Json sequence_json(std::span<const int> x, int d);
Json permutation_json(const Permutation& pi);
Json poset_json(const FactorialPoset& p, bool with_covers);
Json matrix_json(const TriMatrix& a);
Json pattern_json(const BivincularPattern& p);

BivincularPattern pattern_from_json(const Json& j);

/// One object read from an input stream. `line` is the 1-based line where
/// the object starts in line mode, or the 1-based array position in JSON
/// mode. When parsing failed, `error` is set and the payload is empty.
struct InputItem {
  int line = 0;
  std::vector<int> values;             ///< sequence, permutation or omega
  std::vector<std::vector<int>> rows;  ///< matrix rows
  std::string error;
};

enum class ItemShape { integer_list, matrix };

/// Reads every object from `in`. Input starting with '[' is a JSON array
/// whose elements are either bare arrays or objects carrying one of the keys
/// "values", "omega" or "rows". Otherwise integer lists are one per nonblank
/// line and matrices are blocks of row lines separated by blank lines.
std::vector<InputItem> read_items(std::istream& in, ItemShape shape);

} // namespace fishlab::io
