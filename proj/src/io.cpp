#include "gmmn/io.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "gmmn/errors.hpp"

namespace gmmn {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

// Numbers are kept as their source text behind this marker so decimals stay exact.
constexpr char kNumberTag = '\x01';

class ExactDom : public nlohmann::json_sax<json> {
 public:
  json root;

  bool null() override { return put(nullptr); }
  bool boolean(bool v) override { return put(v); }
  bool number_integer(number_integer_t v) override { return put(std::string(1, kNumberTag) + std::to_string(v)); }
  bool number_unsigned(number_unsigned_t v) override { return put(std::string(1, kNumberTag) + std::to_string(v)); }
  bool number_float(number_float_t, const string_t& raw) override { return put(std::string(1, kNumberTag) + raw); }
  bool string(string_t& v) override { return put(v); }
  bool binary(binary_t&) override { return put(nullptr); }
  bool start_object(std::size_t) override { return open(json::object()); }
  bool key(string_t& k) override {
    key_ = k;
    return true;
  }
  bool end_object() override { return close(); }
  bool start_array(std::size_t) override { return open(json::array()); }
  bool end_array() override { return close(); }
  bool parse_error(std::size_t pos, const std::string&, const nlohmann::detail::exception& ex) override {
    throw ParseError("JSON error at byte " + std::to_string(pos) + ": " + ex.what());
  }

 private:
  json* slot(json value) {
    if (stack_.empty()) {
      root = std::move(value);
      return &root;
    }
    json& top = *stack_.back();
    if (top.is_array()) {
      top.push_back(std::move(value));
      return &top.back();
    }
    top[key_] = std::move(value);
    return &top[key_];
  }
  bool put(json value) {
    slot(std::move(value));
    return true;
  }
  bool open(json value) {
    stack_.push_back(slot(std::move(value)));
    return true;
  }
  bool close() {
    stack_.pop_back();
    return true;
  }

  std::vector<json*> stack_;
  std::string key_;
};

json parse_line(const std::string& line, int line_no) {
  ExactDom dom;
  try {
    json::sax_parse(line, &dom);
  } catch (const ParseError& e) {
    throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
  }
  if (!dom.root.is_object()) throw ParseError("line " + std::to_string(line_no) + ": expected a JSON object");
  return dom.root;
}

bool is_number(const json& j) { return j.is_string() && !j.get_ref<const std::string&>().empty() && j.get_ref<const std::string&>()[0] == kNumberTag; }

// value = mantissa * 10^exponent, mantissa without trailing zeros.
struct Decimal {
  Coord mantissa = 0;
  int exponent = 0;
};

Decimal to_decimal(const json& j, const std::string& what) {
  if (!is_number(j)) throw ParseError(what + " must be a number");
  const std::string raw = j.get<std::string>().substr(1);
  Decimal d;
  std::size_t i = 0;
  bool negative = false;
  if (i < raw.size() && (raw[i] == '-' || raw[i] == '+')) negative = raw[i++] == '-';
  int digits = 0;
  auto push_digit = [&](char c) {
    if (d.mantissa > (INT64_MAX - 9) / 10) throw OverflowRisk(what + " has too many digits: " + raw);
    d.mantissa = d.mantissa * 10 + (c - '0');
    ++digits;
  };
  for (; i < raw.size() && std::isdigit(static_cast<unsigned char>(raw[i])); ++i) push_digit(raw[i]);
  if (i < raw.size() && raw[i] == '.') {
    for (++i; i < raw.size() && std::isdigit(static_cast<unsigned char>(raw[i])); ++i) {
      push_digit(raw[i]);
      --d.exponent;
    }
  }
  if (i < raw.size() && (raw[i] == 'e' || raw[i] == 'E')) {
    const long e = std::stol(raw.substr(i + 1));
    if (e > 40 || e < -40) throw OverflowRisk(what + " exponent out of range: " + raw);
    d.exponent += static_cast<int>(e);
    i = raw.size();
  }
  if (i != raw.size() || digits == 0) throw ParseError(what + " is not a decimal number: " + raw);
  if (negative) d.mantissa = -d.mantissa;
  while (d.mantissa != 0 && d.mantissa % 10 == 0) {
    d.mantissa /= 10;
    ++d.exponent;
  }
  if (d.mantissa == 0) d.exponent = 0;
  return d;
}

Coord scaled(const Decimal& d, int scale, const std::string& what) {
  Coord v = d.mantissa;
  for (int e = d.exponent + scale; e > 0; --e) {
    if (v > INT64_MAX / 10 || v < INT64_MIN / 10) throw OverflowRisk(what + " does not fit after scaling");
    v *= 10;
  }
  if (d.exponent + scale < 0) throw ParseError(what + " needs more decimal places than the scale allows");
  return v;
}

int needed_scale(const Decimal& d) { return std::max(0, -d.exponent); }

std::string text_field(const json& obj, const char* key, const std::string& fallback) {
  if (!obj.contains(key)) return fallback;
  const json& v = obj.at(key);
  if (!v.is_string() || is_number(v)) throw ParseError(std::string("field '") + key + "' must be a string");
  return v.get<std::string>();
}

long long int_field(const json& obj, const char* key, long long fallback) {
  if (!obj.contains(key)) return fallback;
  const Decimal d = to_decimal(obj.at(key), key);
  if (d.exponent < 0) throw ParseError(std::string("field '") + key + "' must be an integer");
  return scaled(d, 0, key);
}

double real_field(const json& obj, const char* key) {
  if (!obj.contains(key)) return 0.0;
  if (!is_number(obj.at(key))) throw ParseError(std::string("field '") + key + "' must be a number");
  return std::stod(obj.at(key).get<std::string>().substr(1));
}

std::pair<Decimal, Decimal> point_field(const json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || !obj.at(key).is_array() || obj.at(key).size() != 2)
    throw ParseError(where + ": '" + key + "' must be [x, y]");
  return {to_decimal(obj.at(key)[0], where + " x"), to_decimal(obj.at(key)[1], where + " y")};
}

std::pair<Decimal, Decimal> point_value(const json& v, const std::string& where) {
  if (!v.is_array() || v.size() != 2) throw ParseError(where + ": point must be [x, y]");
  return {to_decimal(v[0], where + " x"), to_decimal(v[1], where + " y")};
}

std::vector<std::pair<int, std::string>> read_lines(std::istream& in) {
  std::vector<std::pair<int, std::string>> out;
  std::string line;
  int no = 0;
  while (std::getline(in, line)) {
    ++no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    out.emplace_back(no, line);
  }
  if (in.bad()) throw ParseError("read error");
  return out;
}

std::string format_point(Point p, int scale) {
  return "[" + format_decimal(p.x, scale) + "," + format_decimal(p.y, scale) + "]";
}

std::string slurp(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

}  // namespace

std::string format_decimal(Coord value, int scale) {
  const bool negative = value < 0;
  // Work on the magnitude as unsigned so INT64_MIN is safe.
  const unsigned long long mag = negative ? 0ULL - static_cast<unsigned long long>(value) : static_cast<unsigned long long>(value);
  unsigned long long pow10 = 1;
  for (int i = 0; i < scale; ++i) pow10 *= 10;
  std::string out = negative ? "-" : "";
  out += std::to_string(mag / pow10);
  unsigned long long frac = mag % pow10;
  if (scale > 0 && frac != 0) {
    std::string digits = std::to_string(frac);
    digits.insert(0, static_cast<std::size_t>(scale) - digits.size(), '0');
    while (digits.back() == '0') digits.pop_back();
    out += "." + digits;
  }
  return out;
}

Instance parse_instance(std::istream& in) {
  const auto lines = read_lines(in);
  if (lines.empty()) throw ParseError("instance file is empty");
  const json header = parse_line(lines[0].second, lines[0].first);
  const std::string schema = text_field(header, "schema", "");
  if (schema != kInstanceSchema) throw ParseError("unsupported instance schema '" + schema + "'");
  Instance inst;
  inst.name = text_field(header, "name", "");
  inst.intended_class = text_field(header, "class", "");
  int scale = static_cast<int>(int_field(header, "scale", 0));
  if (scale < 0 || scale > kMaxScale) throw ParseError("scale out of range");

  std::vector<std::array<Decimal, 4>> raw;
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const json rec = parse_line(lines[k].second, lines[k].first);
    const std::string where = "line " + std::to_string(lines[k].first);
    const auto [sx, sy] = point_field(rec, "s", where);
    const auto [tx, ty] = point_field(rec, "t", where);
    raw.push_back({sx, sy, tx, ty});
    for (const auto& d : raw.back()) scale = std::max(scale, needed_scale(d));
  }
  if (raw.empty()) throw ParseError("instance has no pairs");
  if (scale > kMaxScale) throw OverflowRisk("coordinates need more than " + std::to_string(kMaxScale) + " decimals");
  if (header.contains("pairs") && int_field(header, "pairs", 0) != static_cast<long long>(raw.size()))
    throw ParseError("header announces " + std::to_string(int_field(header, "pairs", 0)) + " pairs, file has " +
                     std::to_string(raw.size()));
  inst.scale = scale;
  for (const auto& r : raw)
    inst.pairs.push_back({{scaled(r[0], scale, "x"), scaled(r[1], scale, "y")}, {scaled(r[2], scale, "x"), scaled(r[3], scale, "y")}});
  // Surfaces OverflowRisk before any solver runs.
  (void)HananGrid(inst.pairs);
  return inst;
}

Instance parse_instance_text(const std::string& text) {
  std::istringstream in(text);
  return parse_instance(in);
}

Instance read_instance_file(const std::string& path) { return parse_instance_text(slurp(path)); }

std::string serialize_instance(const Instance& instance) {
  ordered_json header;
  header["schema"] = kInstanceSchema;
  header["name"] = instance.name;
  header["class"] = instance.intended_class;
  header["scale"] = instance.scale;
  header["pairs"] = instance.pairs.size();
  std::string out = header.dump() + "\n";
  for (const auto& p : instance.pairs)
    out += "{\"s\":" + format_point(p.s, instance.scale) + ",\"t\":" + format_point(p.t, instance.scale) + "}\n";
  return out;
}

void write_text_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw ParseError("cannot write '" + path + "'");
  f << text;
  if (!f) throw ParseError("write to '" + path + "' failed");
}

std::string serialize_solution(const Solution& solution, int scale) {
  const GridNetwork& net = solution.network;
  const HananGrid& g = net.grid();
  ordered_json header;
  header["schema"] = kSolutionSchema;
  header["solver"] = solution.solver;
  header["total_length"] = net.total_length();
  header["scale"] = scale;
  header["ratio"] = solution.ratio;
  header["wall_ms"] = solution.wall_ms;
  header["pairs"] = net.paths().size();
  header["edges"] = net.edges().size();
  header["warnings"] = solution.warnings;
  std::string out = header.dump() + "\n";
  for (std::size_t i = 0; i < net.paths().size(); ++i) {
    out += "{\"pair\":" + std::to_string(i) + ",\"path\":[";
    const auto& path = net.paths()[i];
    for (std::size_t k = 0; k < path.size(); ++k) out += (k ? "," : "") + format_point(g.point(path[k]), scale);
    out += "]}\n";
  }
  for (EdgeId e : net.edges()) {
    const auto [a, b] = g.edge_endpoints(e);
    out += "{\"edge\":[" + format_point(g.point(a), scale) + "," + format_point(g.point(b), scale) + "]}\n";
  }
  return out;
}

SolutionRecord parse_solution(std::istream& in) {
  const auto lines = read_lines(in);
  if (lines.empty()) throw ParseError("solution file is empty");
  const json header = parse_line(lines[0].second, lines[0].first);
  if (text_field(header, "schema", "") != kSolutionSchema) throw ParseError("unsupported solution schema");
  SolutionRecord rec;
  rec.solver = text_field(header, "solver", "");
  rec.total_length = int_field(header, "total_length", 0);
  rec.scale = static_cast<int>(int_field(header, "scale", 0));
  if (rec.scale < 0 || rec.scale > kMaxScale) throw ParseError("scale out of range");
  rec.ratio = int_field(header, "ratio", 1);
  rec.wall_ms = real_field(header, "wall_ms");
  if (header.contains("warnings"))
    for (const auto& w : header.at("warnings")) rec.warnings.push_back(w.get<std::string>());
  auto point = [&](const json& v, const std::string& where) {
    const auto [x, y] = point_value(v, where);
    return Point{scaled(x, rec.scale, where), scaled(y, rec.scale, where)};
  };
  for (std::size_t k = 1; k < lines.size(); ++k) {
    const json r = parse_line(lines[k].second, lines[k].first);
    const std::string where = "line " + std::to_string(lines[k].first);
    if (r.contains("path")) {
      const auto idx = static_cast<std::size_t>(int_field(r, "pair", -1));
      if (idx != rec.paths.size()) throw ParseError(where + ": paths must be listed in pair order");
      std::vector<Point> pts;
      for (const auto& v : r.at("path")) pts.push_back(point(v, where));
      rec.paths.push_back(std::move(pts));
    } else if (r.contains("edge")) {
      const json& e = r.at("edge");
      if (!e.is_array() || e.size() != 2) throw ParseError(where + ": edge must have two points");
      rec.edges.emplace_back(point(e[0], where), point(e[1], where));
    } else {
      throw ParseError(where + ": unknown record");
    }
  }
  return rec;
}

SolutionRecord parse_solution_text(const std::string& text) {
  std::istringstream in(text);
  return parse_solution(in);
}

SolutionRecord read_solution_file(const std::string& path) { return parse_solution_text(slurp(path)); }

GridNetwork network_from_record(const Instance& instance, const SolutionRecord& record) {
  if (record.scale != instance.scale) throw ParseError("solution scale differs from the instance scale");
  if (record.paths.size() != instance.pairs.size()) throw ParseError("solution has a different number of paths");
  HananGrid grid = build_hanan_grid(instance.pairs);
  std::vector<MPath> paths;
  for (const auto& pts : record.paths) {
    std::vector<GridVertex> corners;
    for (const auto& p : pts) {
      try {
        corners.push_back(grid.vertex_at(p));
      } catch (const std::out_of_range&) {
        throw ParseError("solution vertex is not on the instance's Hanan grid");
      }
    }
    try {
      paths.push_back(grid_polyline(grid, corners));
    } catch (const std::invalid_argument& e) {
      throw ParseError(e.what());
    }
  }
  return GridNetwork(std::move(grid), std::move(paths));
}

Validation check_solution_record(const Instance& instance, const SolutionRecord& record) {
  GridNetwork net;
  try {
    net = network_from_record(instance, record);
  } catch (const ParseError& e) {
    return {false, e.what()};
  }
  if (Validation v = validate_network(instance.pairs, net); !v) return v;
  if (net.total_length() != record.total_length)
    return {false, "paths give length " + std::to_string(net.total_length()) + ", header says " +
                       std::to_string(record.total_length)};
  std::vector<EdgeId> listed;
  const HananGrid& g = net.grid();
  for (const auto& [a, b] : record.edges) {
    try {
      const GridVertex va = g.vertex_at(a), vb = g.vertex_at(b);
      listed.push_back(g.edge_between(va, vb));
    } catch (const std::exception&) {
      return {false, "edge record is not a grid edge"};
    }
  }
  std::sort(listed.begin(), listed.end());
  if (std::adjacent_find(listed.begin(), listed.end()) != listed.end()) return {false, "edge listed twice"};
  Length sum = 0;
  for (EdgeId e : listed) sum += g.edge_length(e);
  if (sum != record.total_length)
    return {false, "edge list sums to " + std::to_string(sum) + ", header says " + std::to_string(record.total_length)};
  if (listed != net.edges()) return {false, "edge list differs from the union of the paths"};
  return {};
}

}  // namespace gmmn
