#include "acedag/formats.hpp"

#include <charconv>
#include <cstdio>
#include <optional>
#include <sstream>
#include <vector>

namespace acedag {

namespace {

struct Line {
  std::string_view text;
  std::size_t offset;
};

std::vector<Line> lines_of(std::string_view text) {
  std::vector<Line> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    out.push_back({text.substr(pos, eol - pos), pos});
    pos = eol + 1;
  }
  return out;
}

std::vector<Line> fields_of(const Line& line) {
  std::vector<Line> out;
  std::size_t i = 0;
  const auto s = line.text;
  while (i < s.size()) {
    while (i < s.size() && (s[i] == ' ' || s[i] == '\t' || s[i] == '\r')) ++i;
    if (i == s.size()) break;
    const auto start = i;
    while (i < s.size() && s[i] != ' ' && s[i] != '\t' && s[i] != '\r') ++i;
    out.push_back({s.substr(start, i - start), line.offset + start});
  }
  return out;
}

double parse_double(const Line& field) {
  double v = 0.0;
  const auto* first = field.text.data();
  const auto* last = first + field.text.size();
  auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc{} || ptr != last) {
    throw FormatError("expected a number, got '" + std::string(field.text) + "'", field.offset);
  }
  return v;
}

bool is_comment(const std::vector<Line>& fields) { return !fields.empty() && fields[0].text.front() == '#'; }

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, ptr);
}

}  // namespace

ParticleConfig parse_config(std::string_view text) {
  std::optional<Group> group;
  std::vector<std::vector<double>> rows;
  for (const auto& line : lines_of(text)) {
    const auto fields = fields_of(line);
    if (fields.empty()) continue;
    if (is_comment(fields)) {
      const auto body = line.text.substr(line.text.find('#') + 1);
      const auto key = body.find("group=");
      if (key != std::string_view::npos && !group) {
        auto value = body.substr(key + 6);
        value = value.substr(0, value.find_first_of(" \t\r"));
        try {
          group = parse_group(value);
        } catch (const std::invalid_argument& e) {
          throw FormatError(e.what(), line.offset);
        }
      }
      continue;
    }
    if (!group) throw FormatError("particle line before '# group=' header", line.offset);
    if (static_cast<int>(fields.size()) != coordinate_count(*group)) {
      throw FormatError("expected " + std::to_string(coordinate_count(*group)) + " coordinates, found " +
                            std::to_string(fields.size()),
                        line.offset);
    }
    std::vector<double> row;
    for (const auto& f : fields) row.push_back(parse_double(f));
    rows.push_back(std::move(row));
  }
  if (!group) throw FormatError("missing '# group=' header", 0);
  ParticleConfig config;
  config.group = *group;
  config.coords.resize(static_cast<Eigen::Index>(rows.size()), coordinate_count(*group));
  for (std::size_t j = 0; j < rows.size(); ++j) {
    for (std::size_t c = 0; c < rows[j].size(); ++c) {
      config.coords(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(c)) = rows[j][c];
    }
  }
  return config;
}

std::string format_config(const ParticleConfig& config) {
  std::string out = "# group=" + std::string(group_name(config.group)) + "\n";
  for (Eigen::Index j = 0; j < config.size(); ++j) {
    for (Eigen::Index c = 0; c < config.coords.cols(); ++c) {
      if (c) out += ' ';
      out += format_double(config.coords(j, c));
    }
    out += '\n';
  }
  return out;
}

CoefficientVector parse_coefficients(std::string_view text, Group g) {
  CoefficientVector out;
  for (const auto& line : lines_of(text)) {
    const auto fields = fields_of(line);
    if (fields.empty() || is_comment(fields)) continue;
    if (fields.size() != 3) throw FormatError("coefficient line must be '<tuple> <re> <im>'", line.offset);
    BasisTuple t;
    try {
      t = parse_tuple(fields[0].text, g);
    } catch (const FormatError& e) {
      throw FormatError(e.what(), fields[0].offset);
    }
    out.emplace_back(std::move(t), Complex(parse_double(fields[1]), parse_double(fields[2])));
  }
  return out;
}

std::string format_coefficients(const CoefficientVector& coeffs, Group g) {
  std::string out;
  for (const auto& [t, c] : coeffs) {
    out += format_tuple(t, g) + ' ' + format_double(c.real()) + ' ' + format_double(c.imag()) + '\n';
  }
  return out;
}

}  // namespace acedag
