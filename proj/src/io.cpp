#include "fishlab/io.hpp"

#include "fishlab/error.hpp"

#include <charconv>
#include <istream>
#include <iterator>
#include <sstream>

namespace fishlab::io {
namespace {

bool blank(const std::string& s) {
  return s.find_first_not_of(" \t\r") == std::string::npos;
}

std::vector<int> int_list(const Json& j, const char* what) {
  if (!j.is_array()) throw InputError(std::string(what) + " must be an array");
  std::vector<int> out;
  for (const auto& v : j) {
    if (!v.is_number_integer()) throw InputError(std::string(what) + " must hold integers");
    out.push_back(v.get<int>());
  }
  return out;
}

InputItem item_from_json(const Json& j, int position, ItemShape shape) {
  InputItem item;
  item.line = position;
  try {
    const Json* payload = &j;
    if (j.is_object()) {
      const char* key = shape == ItemShape::matrix ? "rows" : nullptr;
      if (!key) key = j.contains("values") ? "values" : "omega";
      if (!j.contains(key)) throw InputError(std::string("object lacks \"") + key + "\"");
      payload = &j.at(key);
    }
    if (shape == ItemShape::matrix) {
      if (!payload->is_array()) throw InputError("rows must be an array");
      for (const auto& row : *payload) item.rows.push_back(int_list(row, "matrix row"));
      if (item.rows.empty()) throw InputError("matrix has no rows");
    } else {
      item.values = int_list(*payload, "values");
      if (item.values.empty()) throw InputError("empty list");
    }
  } catch (const std::exception& e) {
    item.values.clear();
    item.rows.clear();
    item.error = e.what();
  }
  return item;
}

InputItem item_from_line(const std::string& text, int line) {
  InputItem item;
  item.line = line;
  try {
    item.values = parse_line(text);
  } catch (const InputError& e) {
    item.error = e.what();
  }
  return item;
}

} // namespace

std::string format_line(std::span<const int> values) {
  std::string out;
  for (int v : values) {
    if (!out.empty()) out += ' ';
    out += std::to_string(v);
  }
  return out;
}

std::vector<int> parse_line(const std::string& line) {
  std::vector<int> out;
  const char* p = line.data();
  const char* end = p + line.size();
  while (p < end) {
    if (*p == ' ' || *p == '\t' || *p == '\r' || *p == ',') {
      ++p;
      continue;
    }
    int v = 0;
    auto [next, ec] = std::from_chars(p, end, v);
    if (ec != std::errc{}) throw InputError("malformed integer list: \"" + line + "\"");
    out.push_back(v);
    p = next;
  }
  if (out.empty()) throw InputError("empty line");
  return out;
}

std::string format_matrix(const TriMatrix& a) {
  std::string out;
  for (const auto& row : a.rows()) {
    out += format_line(row);
    out += '\n';
  }
  return out;
}

Json sequence_json(std::span<const int> x, int d) {
  return Json{{"d", d}, {"values", std::vector<int>(x.begin(), x.end())}};
}

Json permutation_json(const Permutation& pi) { return Json{{"values", pi.values()}}; }

Json poset_json(const FactorialPoset& p, bool with_covers) {
  Json j{{"n", p.size()}, {"omega", p.omega()}};
  if (with_covers) {
    Json covers = Json::array();
    for (auto [u, v] : p.covers()) covers.push_back({u, v});
    j["covers"] = std::move(covers);
  }
  return j;
}

Json matrix_json(const TriMatrix& a) { return Json{{"dim", a.dim()}, {"rows", a.rows()}}; }

Json pattern_json(const BivincularPattern& p) {
  return Json{{"values", p.values},
              {"adjacent_after", p.adjacent_after},
              {"value_links", p.value_links},
              {"active_marks", p.active_marks}};
}

BivincularPattern pattern_from_json(const Json& j) {
  BivincularPattern p;
  p.values = int_list(j.at("values"), "values");
  if (j.contains("adjacent_after")) p.adjacent_after = int_list(j["adjacent_after"], "adjacent_after");
  if (j.contains("value_links")) p.value_links = int_list(j["value_links"], "value_links");
  if (j.contains("active_marks")) p.active_marks = int_list(j["active_marks"], "active_marks");
  p.validate();
  return p;
}

std::vector<InputItem> read_items(std::istream& in, ItemShape shape) {
  const std::string text{std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  std::vector<InputItem> items;

  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '[') {
    Json doc;
    try {
      doc = Json::parse(text);
    } catch (const Json::parse_error& e) {
      InputItem bad;
      bad.line = 1;
      bad.error = std::string("malformed JSON: ") + e.what();
      items.push_back(std::move(bad));
      return items;
    }
    int position = 0;
    for (const auto& element : doc) items.push_back(item_from_json(element, ++position, shape));
    return items;
  }

  std::istringstream lines(text);
  std::string line;
  int number = 0;
  InputItem block;
  auto flush_block = [&] {
    if (block.line != 0) items.push_back(std::move(block));
    block = InputItem{};
  };
  while (std::getline(lines, line)) {
    ++number;
    if (shape == ItemShape::integer_list) {
      if (!blank(line)) items.push_back(item_from_line(line, number));
      continue;
    }
    if (blank(line)) {
      flush_block();
      continue;
    }
    if (block.line == 0) block.line = number;
    if (!block.error.empty()) continue;
    try {
      block.rows.push_back(parse_line(line));
    } catch (const InputError& e) {
      block.rows.clear();
      block.error = e.what();
    }
  }
  flush_block();
  return items;
}

} // namespace fishlab::io
