#include "conceptdim/context_io.hpp"

#include <fstream>
#include <sstream>

#include "conceptdim/errors.hpp"
#include "conceptdim/io_util.hpp"

namespace conceptdim {

namespace {

[[noreturn]] void fail(std::size_t line_no, const std::string& msg) {
  throw InvalidInputError("CXT line " + std::to_string(line_no + 1) + ": " + msg);
}

void check_line(std::size_t line_no, const std::string& line) {
  if (!line.empty() && (line.back() == ' ' || line.back() == '\t' || line.back() == '\r'))
    fail(line_no, "trailing whitespace rejected");
}

std::size_t parse_count(std::size_t line_no, const std::string& line) {
  if (line.empty()) fail(line_no, "expected a count");
  std::size_t value = 0;
  for (char c : line) {
    if (c < '0' || c > '9') fail(line_no, "count must be digits only");
    value = value * 10 + static_cast<std::size_t>(c - '0');
    if (value > 100'000'000) fail(line_no, "count out of range");
  }
  return value;
}

void check_name(const std::string& name, const char* kind) {
  if (name.empty()) throw InvalidInputError(std::string("empty ") + kind + " name");
  if (name.find_first_of(",\"\n\r") != std::string::npos)
    throw InvalidInputError(std::string(kind) + " name contains a reserved character: " + name);
  if (name.front() == ' ' || name.back() == ' ' || name.back() == '\t')
    throw InvalidInputError(std::string(kind) + " name has leading or trailing whitespace: " + name);
}

}  // namespace

FormalContext read_cxt(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  std::string text = std::move(buf).str();
  std::vector<std::string> lines = split_lines(text);
  // A canonical file ends with LF, so the final split piece is empty.
  if (lines.size() < 6) throw InvalidInputError("CXT: truncated header");
  for (std::size_t i = 0; i + 1 < lines.size(); ++i) check_line(i, lines[i]);
  if (!lines.back().empty()) throw InvalidInputError("CXT: missing final newline");

  std::size_t at = 0;
  if (lines[at] != "B") fail(at, "expected format marker 'B'");
  ++at;
  if (!lines[at].empty()) fail(at, "expected blank line");
  ++at;
  std::size_t object_count = parse_count(at, lines[at]);
  ++at;
  std::size_t attribute_count = parse_count(at, lines[at]);
  ++at;
  if (!lines[at].empty()) fail(at, "expected blank line");
  ++at;

  std::size_t expected = at + object_count + attribute_count + object_count + 1;
  if (lines.size() != expected)
    throw InvalidInputError("CXT: expected " + std::to_string(expected - 1) +
                            " lines, found " + std::to_string(lines.size() - 1));

  std::vector<std::string> objects, attributes;
  objects.reserve(object_count);
  attributes.reserve(attribute_count);
  for (std::size_t g = 0; g < object_count; ++g, ++at) {
    if (lines[at].empty()) fail(at, "empty object name");
    objects.push_back(lines[at]);
  }
  for (std::size_t m = 0; m < attribute_count; ++m, ++at) {
    if (lines[at].empty()) fail(at, "empty attribute name");
    attributes.push_back(lines[at]);
  }
  std::vector<DynamicBitset> rows;
  rows.reserve(object_count);
  for (std::size_t g = 0; g < object_count; ++g, ++at) {
    const std::string& line = lines[at];
    if (line.size() != attribute_count) fail(at, "incidence row has wrong length");
    DynamicBitset row(attribute_count);
    for (std::size_t m = 0; m < attribute_count; ++m) {
      if (line[m] == 'X')
        row.set(m);
      else if (line[m] != '.')
        fail(at, "incidence cells must be '.' or 'X'");
    }
    rows.push_back(std::move(row));
  }
  return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

FormalContext read_cxt_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInputError("cannot open file: " + path);
  return read_cxt(in);
}

std::string to_cxt_string(const FormalContext& context) {
  for (const auto& n : context.objects()) check_name(n, "object");
  for (const auto& n : context.attributes()) check_name(n, "attribute");
  std::string out;
  out += "B\n\n";
  out += std::to_string(context.object_count()) + "\n";
  out += std::to_string(context.attribute_count()) + "\n\n";
  for (const auto& n : context.objects()) out += n + "\n";
  for (const auto& n : context.attributes()) out += n + "\n";
  for (std::size_t g = 0; g < context.object_count(); ++g) {
    for (std::size_t m = 0; m < context.attribute_count(); ++m)
      out += context.incidence(g, m) ? 'X' : '.';
    out += '\n';
  }
  return out;
}

void write_cxt_file(const std::string& path, const FormalContext& context) {
  atomic_write_file(path, to_cxt_string(context));
}

FormalContext read_context_csv(std::istream& in) {
  std::ostringstream buf;
  buf << in.rdbuf();
  std::vector<std::string> lines = split_lines(std::move(buf).str());
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty()) throw InvalidInputError("context CSV: empty input");

  auto split_row = [](const std::string& line) {
    std::vector<std::string> cells;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i) {
      if (i == line.size() || line[i] == ',') {
        cells.emplace_back(line.substr(start, i - start));
        start = i + 1;
      }
    }
    return cells;
  };

  std::vector<std::string> header = split_row(lines[0]);
  std::vector<std::string> attributes(header.begin() + 1, header.end());
  std::vector<std::string> objects;
  std::vector<DynamicBitset> rows;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string> cells = split_row(lines[i]);
    if (cells.size() != attributes.size() + 1)
      throw InvalidInputError("context CSV row " + std::to_string(i + 1) + ": wrong cell count");
    objects.push_back(cells[0]);
    DynamicBitset row(attributes.size());
    for (std::size_t m = 0; m < attributes.size(); ++m) {
      std::string_view cell = trim(cells[m + 1]);
      if (cell == "1")
        row.set(m);
      else if (cell != "0")
        throw InvalidInputError("context CSV row " + std::to_string(i + 1) +
                                ": cells must be 0 or 1");
    }
    rows.push_back(std::move(row));
  }
  return FormalContext(std::move(objects), std::move(attributes), std::move(rows));
}

FormalContext read_context_csv_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInputError("cannot open file: " + path);
  return read_context_csv(in);
}

std::string to_context_csv_string(const FormalContext& context) {
  for (const auto& n : context.objects()) check_name(n, "object");
  for (const auto& n : context.attributes()) check_name(n, "attribute");
  std::string out;
  for (const auto& n : context.attributes()) {
    out += ',';
    out += n;
  }
  out += '\n';
  for (std::size_t g = 0; g < context.object_count(); ++g) {
    out += context.objects()[g];
    for (std::size_t m = 0; m < context.attribute_count(); ++m)
      out += context.incidence(g, m) ? ",1" : ",0";
    out += '\n';
  }
  return out;
}

void write_context_csv_file(const std::string& path, const FormalContext& context) {
  atomic_write_file(path, to_context_csv_string(context));
}

}  // namespace conceptdim
