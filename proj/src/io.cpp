#include "shopsched/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace shopsched::io {

namespace {

// Yields non-blank lines with '#' comments stripped, remembering the
// 1-based line number of the last line returned.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::string& line) {
    while (std::getline(in_, line)) {
      ++number_;
      if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  }

  std::string require(const char* what) {
    std::string line;
    if (!next(line)) throw ParseError(number_, std::string("unexpected end of input, expected ") + what);
    return line;
  }

  std::size_t number() const noexcept { return number_; }

  /// Next line as integers.
  std::vector<std::uint64_t> numbers(const char* what);
  /// Next line as exactly `count` integers.
  std::vector<std::uint64_t> exactly(std::size_t count, const char* what);

 private:
  std::istream& in_;
  std::size_t number_ = 0;
};

std::uint64_t parse_unsigned(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

std::vector<std::uint64_t> parse_numbers(const std::string& line, std::size_t line_no) {
  std::vector<std::uint64_t> values;
  std::istringstream tokens(line);
  std::string token;
  while (tokens >> token) values.push_back(parse_unsigned(token, line_no));
  return values;
}

std::vector<std::uint64_t> expect_count(const std::string& line, std::size_t line_no,
                                        std::size_t count, const char* what) {
  auto values = parse_numbers(line, line_no);
  if (values.size() != count) {
    throw ParseError(line_no, std::string("expected ") + std::to_string(count) + " values for " + what);
  }
  return values;
}

std::vector<std::uint64_t> LineReader::numbers(const char* what) {
  const std::string line = require(what);
  return parse_numbers(line, number_);
}

std::vector<std::uint64_t> LineReader::exactly(std::size_t count, const char* what) {
  const std::string line = require(what);
  return expect_count(line, number_, count, what);
}

void check_trailing(LineReader& reader) {
  std::string extra;
  if (reader.next(extra)) throw ParseError(reader.number(), "unexpected trailing content");
}

FlowShopInstance read_matrix(std::istream& in) {
  LineReader reader(in);
  const auto header = reader.exactly(2, "header");
  const std::size_t m = header[0];
  const std::size_t n = header[1];
  std::vector<std::vector<Duration>> rows;
  rows.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    rows.push_back(reader.numbers("a machine row"));
    if (rows.back().size() != n) {
      throw ValidationError(ValidationErrorKind::DimensionMismatch, i, 0,
                            "line " + std::to_string(reader.number()) + ": machine " +
                                std::to_string(i + 1) + " has " +
                                std::to_string(rows.back().size()) + " entries, expected " +
                                std::to_string(n));
    }
  }
  check_trailing(reader);
  return FlowShopInstance(std::move(rows));
}

FlowShopInstance read_json(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
    const auto m = doc.at("machines").get<std::size_t>();
    const auto n = doc.at("jobs").get<std::size_t>();
    auto rows = doc.at("p").get<std::vector<std::vector<Duration>>>();
    if (rows.size() != m) {
      throw ValidationError(ValidationErrorKind::DimensionMismatch, rows.size(), 0,
                            "'p' has " + std::to_string(rows.size()) + " rows, expected " +
                                std::to_string(m));
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (rows[i].size() != n) {
        throw ValidationError(ValidationErrorKind::DimensionMismatch, i, 0,
                              "machine " + std::to_string(i + 1) + " has " +
                                  std::to_string(rows[i].size()) + " entries, expected " +
                                  std::to_string(n));
      }
    }
    return FlowShopInstance(std::move(rows));
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(0, std::string("invalid JSON instance: ") + e.what());
  }
}

}  // namespace

FlowShopInstance read_instance(std::istream& in) {
  // Buffer the input so skipping leading blanks does not disturb line numbers.
  std::ostringstream buffer;
  buffer << in.rdbuf();
  const std::string text = buffer.str();
  const auto first = text.find_first_not_of(" \t\r\n");
  std::istringstream body(text);
  if (first != std::string::npos && text[first] == '{') return read_json(body);
  return read_matrix(body);
}

FlowShopInstance read_instance_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(0, "cannot open '" + path + "'");
  return read_instance(in);
}

void write_instance(std::ostream& out, const FlowShopInstance& inst) {
  out << inst.machines() << ' ' << inst.jobs() << '\n';
  for (const auto& row : inst.rows()) {
    for (std::size_t j = 0; j < row.size(); ++j) out << (j == 0 ? "" : " ") << row[j];
    out << '\n';
  }
}

void write_instance_json(std::ostream& out, const FlowShopInstance& inst) {
  nlohmann::json doc;
  doc["machines"] = inst.machines();
  doc["jobs"] = inst.jobs();
  doc["p"] = inst.rows();
  out << doc.dump() << '\n';
}

Digraph read_digraph(std::istream& in) {
  LineReader reader(in);
  const auto header = reader.exactly(2, "header");
  const std::size_t v = header[0];
  const std::size_t a = header[1];
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  arcs.reserve(a);
  for (std::size_t k = 0; k < a; ++k) {
    const auto ends = reader.exactly(2, "an arc");
    for (auto label : ends) {
      if (label < 1 || label > v) {
        throw ParseError(reader.number(), "vertex label outside 1.." + std::to_string(v));
      }
    }
    arcs.emplace_back(ends[0] - 1, ends[1] - 1);
  }
  check_trailing(reader);
  return Digraph(v, arcs);
}

void write_digraph(std::ostream& out, const Digraph& g) {
  out << g.vertex_count() << ' ' << g.arc_count() << '\n';
  for (std::size_t v = 0; v < g.vertex_count(); ++v) {
    for (std::size_t w : g.successors(v)) out << v + 1 << ' ' << w + 1 << '\n';
  }
}

std::vector<OrientedTile> read_tiles(std::istream& in) {
  LineReader reader(in);
  std::vector<OrientedTile> tiles;
  std::string line;
  while (reader.next(line)) {
    const auto ends = expect_count(line, reader.number(), 2, "a tile");
    tiles.push_back({ends[0], ends[1], tiles.size()});
  }
  if (tiles.empty()) throw ParseError(reader.number(), "no tiles");
  return tiles;
}

NmtsInstance read_nmts(std::istream& in) {
  LineReader reader(in);
  const std::size_t m = reader.exactly(1, "m")[0];
  NmtsInstance nm;
  nm.sx = reader.exactly(m, "sx");
  nm.sy = reader.exactly(m, "sy");
  nm.t = reader.exactly(m, "t");
  check_trailing(reader);
  return nm;
}

ShopInstance read_shop(std::istream& in) {
  LineReader reader(in);
  const std::string header_line = reader.require("header 'shop <kind> n'");
  std::istringstream header(header_line);
  std::string magic;
  std::string kind;
  std::string count;
  std::string extra;
  if (!(header >> magic >> kind >> count) || (header >> extra) || magic != "shop") {
    throw ParseError(reader.number(), "expected header 'shop <jobshop|openshop> n'");
  }
  ShopInstance shop;
  if (kind == "jobshop") {
    shop.kind = ShopKind::JobShop;
  } else if (kind == "openshop") {
    shop.kind = ShopKind::OpenShop;
  } else {
    throw ParseError(reader.number(), "unknown shop kind '" + kind + "'");
  }
  const std::size_t n = parse_unsigned(count, reader.number());
  for (std::size_t j = 0; j < n; ++j) {
    std::istringstream fields(reader.require("a job line"));
    std::string m1;
    std::string m2;
    std::string route;
    if (!(fields >> m1 >> m2 >> route) || (fields >> extra)) {
      throw ParseError(reader.number(), "expected 'm1 m2 route'");
    }
    ShopJob job;
    job.m1 = parse_unsigned(m1, reader.number());
    job.m2 = parse_unsigned(m2, reader.number());
    if (route == "12") {
      job.route = Route::M1First;
    } else if (route == "21") {
      job.route = Route::M2First;
    } else if (route == "free") {
      job.route = Route::Free;
    } else {
      throw ParseError(reader.number(), "unknown route '" + route + "'");
    }
    shop.jobs.push_back(job);
  }
  check_trailing(reader);
  return shop;
}

void write_shop(std::ostream& out, const ShopInstance& shop) {
  out << "shop " << to_string(shop.kind) << ' ' << shop.jobs.size() << '\n';
  for (const ShopJob& j : shop.jobs) out << j.m1 << ' ' << j.m2 << ' ' << to_string(j.route) << '\n';
}

void write_certificate(std::ostream& out, const ReductionCertificate& cert) {
  out << "# P=" << cert.P << '\n'
      << "# L1=" << cert.L1 << '\n'
      << "# L2=" << cert.L2 << '\n'
      << "# L=" << cert.L << '\n'
      << "# roles=";
  for (std::size_t k = 0; k < cert.roles.size(); ++k) {
    const JobRole r = cert.roles[k];
    out << (k == 0 ? "" : ",") << (r == JobRole::X ? 'x' : r == JobRole::Y ? 'y' : 't');
  }
  out << '\n';
}

JobSequence parse_sequence(std::string_view text) {
  JobSequence seq;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t comma = std::min(text.find(',', pos), text.size());
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    const std::uint64_t job = parse_unsigned(token, 0);
    if (job == 0) throw ParseError(0, "job numbers start at 1");
    seq.order.push_back(job - 1);
    pos = comma + 1;
  }
  return seq;
}

}  // namespace shopsched::io
