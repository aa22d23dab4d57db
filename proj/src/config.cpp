#include "orbires/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "orbires/errors.hpp"

namespace orbires {
namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  for (;;) {
    const auto pos = s.find(sep);
    out.push_back(strip(s.substr(0, pos)));
    if (pos == std::string_view::npos) break;
    s.remove_prefix(pos + 1);
  }
  return out;
}

std::int64_t parse_int(std::string_view s, const std::string& what) {
  s = strip(s);
  std::int64_t v = 0;
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) throw InputError(what + " is not an integer: '" + std::string(s) + "'");
  return v;
}

double parse_double(std::string_view s, const std::string& what) {
  const std::string text(strip(s));
  try {
    std::size_t used = 0;
    const double v = std::stod(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    return v;
  } catch (const std::exception&) {
    throw InputError(what + " is not a number: '" + text + "'");
  }
}

}  // namespace

const char* to_string(Mode m) noexcept { return m == Mode::kPoints ? "points" : "all-zeros"; }

Mode parse_mode(std::string_view text) {
  text = strip(text);
  if (text == "points") return Mode::kPoints;
  if (text == "all-zeros") return Mode::kAllZeros;
  throw InputError("mode must be 'points' or 'all-zeros', got '" + std::string(text) + "'");
}

std::uint64_t fnv1a(std::string_view text) noexcept {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::vector<Rational> parse_rational_list(std::string_view text) {
  std::vector<Rational> out;
  for (auto part : split(text, ',')) out.push_back(parse_rational(part));
  return out;
}

Config parse_config(std::string_view text) {
  Config cfg;
  cfg.hash = fnv1a(text);
  std::string section;
  bool have_space = false, have_field = false;
  std::optional<std::string> pf, pg;
  std::size_t lineno = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++lineno;
    const auto hash = raw.find('#');
    std::string_view line = strip(std::string_view(raw).substr(0, hash));
    if (line.empty()) continue;
    const std::string where = "line " + std::to_string(lineno) + ": ";
    if (line.front() == '[') {
      if (line.back() != ']') throw InputError(where + "unterminated section header");
      section = std::string(strip(line.substr(1, line.size() - 2)));
      if (section != "space" && section != "field" && section != "pencil" && section != "points" &&
          section != "invariant" && section != "oracle" && section != "run")
        throw InputError(where + "unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) throw InputError(where + "expected key = value");
    const std::string key(strip(line.substr(0, eq)));
    const std::string_view value = strip(line.substr(eq + 1));
    if (section.empty()) throw InputError(where + "key '" + key + "' outside any section");
    const auto unknown = [&] { return InputError(where + "unknown key '" + key + "' in [" + section + "]"); };
    try {
      if (section == "space") {
        if (key != "weights") throw unknown();
        cfg.weights.clear();
        for (auto w : split(value, ',')) cfg.weights.push_back(parse_int(w, "weight"));
        have_space = true;
      } else if (section == "field") {
        if (key != "components") throw unknown();
        cfg.field.clear();
        for (auto c : split(value, ',')) {
          if (c.empty()) throw InputError("empty field component");
          cfg.field.emplace_back(c);
        }
        have_field = true;
      } else if (section == "pencil") {
        if (key == "f") pf = std::string(value);
        else if (key == "g") pg = std::string(value);
        else throw unknown();
      } else if (section == "points") {
        if (key != "point") throw unknown();
        cfg.points.push_back(parse_rational_list(value));
      } else if (section == "invariant") {
        if (key != "expr") throw unknown();
        cfg.invariant = std::string(value);
      } else if (section == "oracle") {
        if (key == "epsilon") cfg.oracle.epsilon = parse_double(value, key);
        else if (key == "radius") cfg.oracle.radius = parse_double(value, key);
        else if (key == "newton_tolerance") cfg.oracle.newton_tolerance = parse_double(value, key);
        else if (key == "tolerance") cfg.oracle.tolerance = parse_double(value, key);
        else if (key == "starts") {
          const auto s = parse_int(value, key);
          if (s < 0) throw InputError("starts must be non-negative");
          cfg.oracle.starts = static_cast<std::size_t>(s);
        } else if (key == "seed") {
          const auto s = parse_int(value, key);
          if (s < 0) throw InputError("seed must be non-negative");
          cfg.oracle.seed = static_cast<std::uint64_t>(s);
        } else {
          throw unknown();
        }
      } else if (section == "run") {
        if (key != "mode") throw unknown();
        cfg.mode = parse_mode(value);
      }
    } catch (const InputError& e) {
      const std::string msg = e.what();
      if (msg.rfind("line ", 0) == 0) throw;
      throw InputError(where + msg);
    }
  }
  if (!have_space) throw InputError("config has no [space] weights");
  if (pf.has_value() != pg.has_value()) throw InputError("[pencil] needs both f and g");
  if (pf) cfg.pencil = std::make_pair(*pf, *pg);
  if (have_field == cfg.pencil.has_value()) throw InputError("config needs exactly one of [field] or [pencil]");
  return cfg;
}

Config load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

}  // namespace orbires
