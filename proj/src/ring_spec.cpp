#include "finring/ring_spec.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace finring {

namespace {

class SpecParser {
 public:
  SpecParser(std::string_view text, const BuildOptions& options) : text_(text), options_(options) {}

  RingPtr parse_all() {
    RingPtr ring = parse();
    if (pos_ != text_.size()) error("trailing text '" + std::string(text_.substr(pos_)) + "'");
    return ring;
  }

 private:
  [[noreturn]] void error(const std::string& why) const {
    throw ParseError(ParseError::Kind::unparseable,
                     "bad ring spec '" + std::string(text_) + "': " + why);
  }

  void expect(char c) {
    if (pos_ >= text_.size() || text_[pos_] != c) error(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view keyword() {
    const std::size_t colon = text_.find(':', pos_);
    if (colon == std::string_view::npos) error("missing ':' after constructor");
    auto word = text_.substr(pos_, colon - pos_);
    pos_ = colon + 1;
    return word;
  }

  std::size_t number() {
    std::size_t value = 0;
    const char* first = text_.data() + pos_;
    const char* last = text_.data() + text_.size();
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec != std::errc() || ptr == first) error("expected a positive integer");
    pos_ += std::size_t(ptr - first);
    return value;
  }

  // Bracket-balanced text up to the next top-level ',' or the end.
  std::string_view balanced() {
    const std::size_t start = pos_;
    int depth = 0;
    while (pos_ < text_.size()) {
      const char c = text_[pos_];
      if (c == '[' || c == '(') ++depth;
      if (c == ']' || c == ')') --depth;
      if (depth < 0) error("unbalanced brackets");
      if (c == ',' && depth == 0) break;
      ++pos_;
    }
    if (depth != 0) error("unbalanced brackets");
    if (pos_ == start) error("empty literal");
    return text_.substr(start, pos_ - start);
  }

  RingPtr parse() {
    const auto word = keyword();
    if (word == "zmod") {
      const std::size_t n = number();
      if (n == 0) error("zmod modulus must be positive");
      if (n > options_.order_cap) {
        throw CapExceeded("zmod:" + std::to_string(n) + ": order exceeds cap " +
                          std::to_string(options_.order_cap));
      }
      return build_zmod(Index(n), options_.order_cap);
    }
    if (word == "mat" || word == "tri") {
      const std::size_t k = number();
      if (k == 0 || k > 64) error("matrix dimension out of range");
      expect(':');
      RingPtr base = parse();
      return word == "mat" ? build_matrix_ring(base, unsigned(k), options_.order_cap)
                           : build_upper_triangular(base, unsigned(k), options_.order_cap);
    }
    if (word == "prod") {
      RingPtr first = parse();
      expect(',');
      RingPtr second = parse();
      return build_product(first, second, options_.order_cap);
    }
    if (word == "corner") {
      RingPtr parent = parse();
      expect(':');
      const Index e = parse_element(*parent, balanced());
      return build_corner(parent, e);
    }
    if (word == "table") {
      return load_table_ring(std::string(balanced()), options_);
    }
    error("unknown constructor '" + std::string(word) + "'");
  }

  std::string_view text_;
  const BuildOptions& options_;
  std::size_t pos_ = 0;
};

}  // namespace

RingPtr parse_ring_spec(std::string_view spec, const BuildOptions& options) {
  return SpecParser(spec, options).parse_all();
}

RingPtr load_table_ring(const std::string& path, const BuildOptions& options) {
  std::ifstream in(path);
  if (!in) throw RingError("cannot open table file " + path);
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(ParseError::Kind::unparseable, "table " + path + ": " + ex.what());
  }
  try {
    const auto order = doc.at("order").get<std::size_t>();
    if (order == 0) throw InvalidRing("table " + path + ": order must be positive");
    if (order > options.order_cap) {
      throw CapExceeded("table " + path + ": order exceeds cap " +
                        std::to_string(options.order_cap));
    }
    auto add = doc.at("add").get<std::vector<Index>>();
    auto mul = doc.at("mul").get<std::vector<Index>>();
    const auto one = doc.at("one").get<Index>();
    if (add.size() != order * order || mul.size() != order * order) {
      throw InvalidRing("table " + path + ": add/mul must have order^2 entries");
    }
    return build_table_ring(Index(order), std::move(add), std::move(mul), one, "table:" + path,
                            options.validate_tables);
  } catch (const nlohmann::json::exception& ex) {
    throw ParseError(ParseError::Kind::unparseable, "table " + path + ": " + ex.what());
  }
}

std::vector<std::string> default_registry() {
  std::vector<std::string> specs;
  for (int n = 1; n <= 12; ++n) specs.push_back("zmod:" + std::to_string(n));
  specs.insert(specs.end(), {
                                "prod:zmod:2,zmod:4",
                                "tri:2:zmod:2",
                                "tri:2:zmod:3",
                                "mat:2:zmod:2",
                                "corner:mat:2:zmod:2:[[1,0],[0,0]]",
                            });
  return specs;
}

std::vector<std::string> read_registry_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw RingError("cannot open registry file " + path);
  std::vector<std::string> specs;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    const auto last = line.find_last_not_of(" \t\r");
    specs.push_back(line.substr(first, last - first + 1));
  }
  return specs;
}

}  // namespace finring
