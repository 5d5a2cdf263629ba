#include "adorn/parse.hpp"

#include <cctype>
#include <map>
#include <vector>

#include "adorn/errors.hpp"

namespace adorn {

namespace {

bool is_name_start(char c) {
  return std::isalpha(static_cast<unsigned char>(c)) || c == '_';
}

bool is_name_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  GroupPresentation parse(std::string name) {
    expect('<');
    std::vector<std::string> names;
    skip_ws();
    if (peek() != '|') {
      names.push_back(parse_name());
      while (accept(',')) names.push_back(parse_name());
    }
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (!index_.emplace(names[i], i).second)
        throw ParseError("duplicate generator \"" + names[i] + "\"", pos_);
    }
    expect('|');
    std::vector<Word> relators;
    skip_ws();
    if (peek() != '>') {
      relators.push_back(parse_relator(names.empty()));
      while (accept(',')) relators.push_back(parse_relator(names.empty()));
    }
    expect('>');
    skip_ws();
    if (pos_ != text_.size()) throw ParseError("trailing characters", pos_);
    return GroupPresentation(std::move(name), std::move(names), std::move(relators));
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      const std::string found = pos_ < text_.size() ? std::string(1, text_[pos_]) : "end of input";
      throw ParseError(std::string("expected '") + c + "' but found '" + found + "'", pos_);
    }
  }

  std::string parse_name() {
    skip_ws();
    if (pos_ >= text_.size() || !is_name_start(text_[pos_]))
      throw ParseError("expected generator name", pos_);
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_name_char(text_[pos_])) ++pos_;
    return std::string(text_.substr(start, pos_ - start));
  }

  long parse_integer() {
    skip_ws();
    const std::size_t start = pos_;
    bool negative = false;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative = text_[pos_] == '-';
      ++pos_;
      skip_ws();
    }
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ParseError("expected integer exponent", start);
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) throw ParseError("exponent too large", start);
      ++pos_;
    }
    return negative ? -value : value;
  }

  long parse_optional_exponent() { return accept('^') ? parse_integer() : 1; }

  Word parse_relator(bool no_generators) {
    const std::size_t start = pos_;
    Word lhs = parse_word();
    if (accept('=')) {
      Word rhs = parse_word();
      lhs = lhs * rhs.inverse();
    }
    if (no_generators && !lhs.empty())
      throw ParseError("relator given for an empty generator list", start);
    return lhs;
  }

  Word parse_word() {
    if (peek() == '1') {
      ++pos_;
      return Word();
    }
    Word w;
    bool any = false;
    while (true) {
      const char c = peek();
      if (c == '(') {
        ++pos_;
        Word inner = parse_word();
        expect(')');
        w.append(inner.pow(parse_optional_exponent()));
      } else if (c == '[') {
        ++pos_;
        const Word u = parse_word();
        expect(',');
        const Word v = parse_word();
        expect(']');
        w.append(commutator(u, v).pow(parse_optional_exponent()));
      } else if (is_name_start(c)) {
        const std::size_t at = pos_;
        const std::string name = parse_name();
        auto it = index_.find(name);
        if (it == index_.end()) throw ParseError("undeclared generator \"" + name + "\"", at);
        w.append(Word::power(it->second, parse_optional_exponent()));
      } else {
        break;
      }
      any = true;
    }
    if (!any) throw ParseError("expected word", pos_);
    return w;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::map<std::string, std::size_t> index_;
};

}  // namespace

GroupPresentation parse_presentation(std::string_view text, std::string name) {
  return Parser(text).parse(std::move(name));
}

}  // namespace adorn
