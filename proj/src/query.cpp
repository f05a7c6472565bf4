#include "gwc/query.hpp"

#include <cctype>

namespace gwc {

ParseError::ParseError(std::size_t pos, const std::string& msg)
    : std::runtime_error("syntax error at position " + std::to_string(pos) + ": " + msg), position(pos) {}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : s_(text) {}

  Bracket bracket() {
    Bracket b;
    expect('<');
    while (peek() == 't') b.insertions.push_back(insertion());
    if (peek() == '|') {
      ++pos_;
      b.profiles.push_back(partition());
      while (peek() == ';') {
        ++pos_;
        b.profiles.push_back(partition());
      }
    }
    expect('>');
    skip();
    if (pos_ != s_.size()) fail("unexpected trailing input");
    return b;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(pos_, msg); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  void expect(char c) {
    if (peek() != c) {
      if (pos_ >= s_.size()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "', found '" + s_[pos_] + "'");
    }
    ++pos_;
  }
  int integer() {
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 6) {
      pos_ = start;
      fail("integer too large");
    }
    return std::stoi(std::string(s_.substr(start, pos_ - start)));
  }
  Insertion insertion() {
    expect('t');
    if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a level after 't'");
    int level = integer();
    expect('(');
    CohClass c;
    switch (peek()) {
      case '1':
        ++pos_;
        c = CohClass::one();
        break;
      case 'w':
        ++pos_;
        c = CohClass::omega();
        break;
      case 'a':
        ++pos_;
        c = CohClass::alpha(integer());
        break;
      case 'b':
        ++pos_;
        c = CohClass::beta(integer());
        break;
      default:
        fail("expected a class: 1, w, a<i> or b<i>");
    }
    expect(')');
    return tau(level, c);
  }
  Partition partition() {
    expect('(');
    Partition p{integer()};
    while (peek() == ',') {
      ++pos_;
      p.push_back(integer());
    }
    expect(')');
    return p;
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

Bracket parse_expression(std::string_view text, int genus, int degree) {
  Bracket b = Parser(text).bracket();
  if (genus < 0) throw SemanticError("genus must be >= 0");
  if (degree < 0) throw SemanticError("degree must be >= 0");
  b.genus = genus;
  b.degree = degree;
  for (const auto& ins : b.insertions)
    if (ins.cls.odd() && (ins.cls.index < 1 || ins.cls.index > genus))
      throw SemanticError("class index " + std::to_string(ins.cls.index) + " outside 1.." + std::to_string(genus));
  for (const auto& p : b.profiles) {
    if (!is_partition(p)) throw SemanticError("profile " + to_string(p) + " is not a partition (positive, weakly decreasing parts)");
    if (size(p) != degree)
      throw SemanticError("profile " + to_string(p) + " has size " + std::to_string(size(p)) + ", degree is " +
                          std::to_string(degree));
  }
  return b;
}

std::string render(const Bracket& b) {
  std::string out = "<";
  bool first = true;
  for (const auto& ins : b.insertions) {
    if (!first) out += ' ';
    first = false;
    out += 't' + std::to_string(ins.level) + '(';
    switch (ins.cls.kind) {
      case ClassKind::Identity: out += '1'; break;
      case ClassKind::Omega: out += 'w'; break;
      case ClassKind::Alpha: out += 'a' + std::to_string(ins.cls.index); break;
      case ClassKind::Beta: out += 'b' + std::to_string(ins.cls.index); break;
    }
    out += ')';
  }
  for (std::size_t i = 0; i < b.profiles.size(); ++i) {
    out += i == 0 ? (b.insertions.empty() ? "| " : " | ") : ";";
    out += '(';
    for (std::size_t j = 0; j < b.profiles[i].size(); ++j) {
      if (j) out += ',';
      out += std::to_string(b.profiles[i][j]);
    }
    out += ')';
  }
  return out + '>';
}

}  // namespace gwc
