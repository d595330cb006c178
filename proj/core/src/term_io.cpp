#include "boolfn/term_io.hpp"

#include <cctype>
#include <stdexcept>

namespace boolfn {

namespace {

void render_tree(const DecisionTree& t, std::string& out) {
  if (t.is_const()) {
    out += "(C ";
    out += t.value().get_str();
    out += ')';
    return;
  }
  out += "(D ";
  out += std::to_string(t.level());
  out += ' ';
  render_tree(t.if_one(), out);
  out += ' ';
  render_tree(t.if_zero(), out);
  out += ')';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Term parse() {
    skip_ws();
    std::size_t head_at = pos_;
    std::string_view head = word();
    Term out = [&]() -> Term {
      if (head == "BDD") {
        int nvars = small_nat("variable count");
        Nat leaf_limit = 2;
        return Bdd{nvars, tree(nvars, leaf_limit)};
      }
      if (head == "MTBDD") {
        int value_bits = small_nat("output width");
        int nvars = small_nat("variable count");
        if (value_bits >= 64) fail("output width too large");
        Nat leaf_limit = 1;
        leaf_limit <<= static_cast<unsigned long>(value_bits);
        return Mtbdd{value_bits, nvars, tree(nvars, leaf_limit)};
      }
      pos_ = head_at;
      fail("expected BDD or MTBDD");
    }();
    skip_ws();
    if (pos_ != text_.size()) fail("trailing input");
    return out;
  }

 private:
  [[noreturn]] void fail(const std::string& what) {
    throw std::invalid_argument("parse error at offset " +
                                std::to_string(pos_) + ": " + what);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  void expect(char c) {
    skip_ws();
    if (pos_ >= text_.size() || text_[pos_] != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string_view word() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isalpha(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected a name");
    return text_.substr(start, pos_ - start);
  }

  Nat nat() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    if (pos_ == start) fail("expected a number");
    return Nat(std::string(text_.substr(start, pos_ - start)), 10);
  }

  int small_nat(const std::string& what) {
    Nat n = nat();
    if (!n.fits_sint_p()) fail(what + " too large");
    return static_cast<int>(n.get_si());
  }

  DecisionTree tree(int level_bound, const Nat& leaf_limit) {
    expect('(');
    skip_ws();
    std::size_t head_at = pos_;
    std::string_view head = word();
    if (head == "C") {
      skip_ws();
      std::size_t at = pos_;
      Nat v = nat();
      if (v >= leaf_limit) {
        pos_ = at;
        fail("leaf value out of range");
      }
      expect(')');
      return DecisionTree::constant(std::move(v));
    }
    if (head == "D") {
      skip_ws();
      std::size_t at = pos_;
      int level = small_nat("level");
      if (level >= level_bound) {
        pos_ = at;
        fail("level out of range");
      }
      DecisionTree one = tree(level_bound, leaf_limit);
      DecisionTree zero = tree(level_bound, leaf_limit);
      expect(')');
      return DecisionTree::decide(level, std::move(one), std::move(zero));
    }
    pos_ = head_at;
    fail("expected C or D");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string render(const DecisionTree& t) {
  std::string out;
  render_tree(t, out);
  return out;
}

std::string render(const Bdd& b) {
  return "BDD " + std::to_string(b.nvars) + " " + render(b.root);
}

std::string render(const Mtbdd& x) {
  return "MTBDD " + std::to_string(x.value_bits) + " " +
         std::to_string(x.nvars) + " " + render(x.root);
}

std::string render(const Term& t) {
  return std::visit([](const auto& v) { return render(v); }, t);
}

Term parse_term(std::string_view text) { return Parser(text).parse(); }

}  // namespace boolfn
