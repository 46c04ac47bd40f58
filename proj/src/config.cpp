#include "tvb/config.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace tvb {

const char* mode_name(Mode m) { return m == Mode::Birch ? "birch" : "tverberg"; }

std::vector<int> Config::expected_class_sizes() const {
  std::vector<int> sizes;
  if (mode == Mode::Birch) {
    sizes.assign(dim + 1, blocks);
  } else {
    sizes.assign(dim + 1, blocks - 1);
    sizes.push_back(1);
  }
  return sizes;
}

void Config::validate_shape() const {
  if (dim < 1) throw std::runtime_error("dimension must be at least 1");
  if (mode == Mode::Birch && blocks < 1) throw std::runtime_error("k must be at least 1");
  if (mode == Mode::Tverberg && blocks < 2) throw std::runtime_error("r must be at least 2");
  const int expected = expected_points();
  if (static_cast<int>(points.size()) != expected) {
    std::ostringstream os;
    os << "expected " << expected << " points";
    throw std::runtime_error(os.str());
  }
  if (colors.size() != points.size())
    throw std::runtime_error("every point needs a color");
  for (const Point& p : points)
    if (static_cast<int>(p.size()) != dim) throw std::runtime_error("dimension mismatch");
  const int nc = color_count();
  std::vector<int> histo(nc, 0);
  for (int c : colors) {
    if (c < 0 || c >= nc) throw std::runtime_error("color out of range");
    ++histo[c];
  }
  const std::vector<int> want = expected_class_sizes();
  for (int c = 0; c < nc; ++c) {
    if (histo[c] != want[c]) {
      std::ostringstream os;
      os << "color class " << c << " has " << histo[c] << " points, expected " << want[c];
      throw std::runtime_error(os.str());
    }
  }
  if (mode == Mode::Birch) {
    if (!query) throw std::runtime_error("birch mode needs a query point");
    if (static_cast<int>(query->size()) != dim) throw std::runtime_error("dimension mismatch");
  } else if (query) {
    throw std::runtime_error("tverberg mode takes no query point");
  }
}

bool Config::verify_general_position() {
  std::vector<Point> all = points;
  if (mode == Mode::Birch && query) all.push_back(*query);
  general_position = in_general_position(all, dim);
  return general_position;
}

Config Config::with_colors(std::vector<int> new_colors) const {
  Config c = *this;
  c.colors = std::move(new_colors);
  c.validate_shape();
  return c;
}

std::string Config::canonical_text() const {
  std::ostringstream os;
  os << "tvconfig 1\n";
  os << "dim " << dim << " mode " << mode_name(mode) << " " << blocks << "\n";
  if (mode == Mode::Birch) {
    os << "query";
    for (const Rat& x : *query) os << " " << x.str();
    os << "\n";
  }
  for (size_t i = 0; i < points.size(); ++i) {
    os << "point " << colors[i];
    for (const Rat& x : points[i]) os << " " << x.str();
    os << "\n";
  }
  return os.str();
}

uint64_t fnv1a64(const std::string& bytes) {
  uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char b : bytes) {
    h ^= b;
    h *= 0x100000001B3ULL;
  }
  return h;
}

std::string Config::fingerprint() const {
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx",
           static_cast<unsigned long long>(fnv1a64(canonical_text())));
  return std::string(buf);
}

namespace {

[[noreturn]] void parse_fail(const std::string& src, int line, const std::string& what) {
  std::ostringstream os;
  os << src << ":" << line << ": " << what;
  throw std::runtime_error(os.str());
}

// Splits a line into whitespace-separated tokens, dropping '#' comments.
std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> toks;
  std::string cur;
  for (char ch : line) {
    if (ch == '#') break;
    if (ch == ' ' || ch == '\t' || ch == '\r') {
      if (!cur.empty()) toks.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) toks.push_back(std::move(cur));
  return toks;
}

int parse_int(const std::string& s, const std::string& src, int line, const char* what) {
  try {
    size_t pos = 0;
    int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    parse_fail(src, line, std::string("bad ") + what + ": '" + s + "'");
  }
}

}  // namespace

Config Config::parse(std::istream& in, const std::string& src) {
  Config cfg;
  std::string line;
  int lineno = 0;
  bool saw_magic = false, saw_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    auto toks = tokenize(line);
    if (toks.empty()) continue;
    if (!saw_magic) {
      if (toks.size() != 2 || toks[0] != "tvconfig" || toks[1] != "1")
        parse_fail(src, lineno, "expected 'tvconfig 1' header");
      saw_magic = true;
      continue;
    }
    if (!saw_header) {
      if (toks.size() != 5 || toks[0] != "dim" || toks[2] != "mode")
        parse_fail(src, lineno, "expected 'dim <d> mode <birch k|tverberg r>'");
      cfg.dim = parse_int(toks[1], src, lineno, "dimension");
      if (toks[3] == "birch") cfg.mode = Mode::Birch;
      else if (toks[3] == "tverberg") cfg.mode = Mode::Tverberg;
      else parse_fail(src, lineno, "mode must be 'birch' or 'tverberg'");
      cfg.blocks = parse_int(toks[4], src, lineno, "block count");
      saw_header = true;
      continue;
    }
    if (toks[0] == "query") {
      if (cfg.query) parse_fail(src, lineno, "duplicate query line");
      if (static_cast<int>(toks.size()) != cfg.dim + 1)
        parse_fail(src, lineno, "query needs exactly d rationals");
      Point q;
      for (int i = 0; i < cfg.dim; ++i) {
        try {
          q.push_back(Rat::parse(toks[1 + i]));
        } catch (const std::exception& e) {
          parse_fail(src, lineno, e.what());
        }
      }
      cfg.query = std::move(q);
    } else if (toks[0] == "point") {
      if (static_cast<int>(toks.size()) != cfg.dim + 2)
        parse_fail(src, lineno, "point needs a color and d rationals");
      cfg.colors.push_back(parse_int(toks[1], src, lineno, "color"));
      Point p;
      for (int i = 0; i < cfg.dim; ++i) {
        try {
          p.push_back(Rat::parse(toks[2 + i]));
        } catch (const std::exception& e) {
          parse_fail(src, lineno, e.what());
        }
      }
      cfg.points.push_back(std::move(p));
    } else {
      parse_fail(src, lineno, "unknown directive '" + toks[0] + "'");
    }
  }
  if (!saw_magic) parse_fail(src, lineno, "empty input, expected 'tvconfig 1'");
  if (!saw_header) parse_fail(src, lineno, "missing 'dim ... mode ...' line");
  cfg.validate_shape();
  if (!cfg.verify_general_position()) throw std::runtime_error("general position violated");
  return cfg;
}

Config Config::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return parse(in, path);
}

void Config::save(const std::string& path) const {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open '" + path + "' for writing");
  out << canonical_text();
  if (!out) throw std::runtime_error("write failed: '" + path + "'");
}

}  // namespace tvb
