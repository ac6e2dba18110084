// Copyright 2026 The suexp Authors
// SPDX-License-Identifier: Apache-2.0

#include "suexp/grid.hpp"

#include <cctype>

#include "suexp/exponent.hpp"

namespace suexp {

struct IntExpr::Node {
  enum class Kind { Number, Name, Neg, Add, Sub, Mul, Pow } kind;
  std::int64_t number = 0;
  std::string name;
  std::shared_ptr<const Node> lhs;
  std::shared_ptr<const Node> rhs;
};

namespace {

using NodePtr = std::shared_ptr<const IntExpr::Node>;
using Kind = IntExpr::Node::Kind;

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

NodePtr make(Kind kind, NodePtr lhs, NodePtr rhs = nullptr) {
  auto n = std::make_shared<IntExpr::Node>();
  n->kind = kind;
  n->lhs = std::move(lhs);
  n->rhs = std::move(rhs);
  return n;
}

class ExprParser {
 public:
  explicit ExprParser(std::string_view text) : text_(text) {}

  NodePtr parse() {
    NodePtr n = sum();
    skip_space();
    if (pos_ < text_.size()) unexpected();
    return n;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void unexpected() const {
    if (pos_ >= text_.size()) {
      throw ParseError("unexpected end of expression '" + std::string(text_) + "'");
    }
    throw ParseError("unexpected token '" + std::string(1, text_[pos_]) + "' at position " +
                     std::to_string(pos_) + " in expression '" + std::string(text_) + "'");
  }

  NodePtr sum() {
    NodePtr n = product();
    for (;;) {
      if (accept('+')) {
        n = make(Kind::Add, n, product());
      } else if (accept('-')) {
        n = make(Kind::Sub, n, product());
      } else {
        return n;
      }
    }
  }
  NodePtr product() {
    NodePtr n = unary();
    while (accept('*')) n = make(Kind::Mul, n, unary());
    return n;
  }
  NodePtr unary() {
    if (accept('-')) return make(Kind::Neg, unary());
    return power();
  }
  NodePtr power() {
    NodePtr base = atom();
    if (accept('^')) return make(Kind::Pow, base, unary());
    return base;
  }
  NodePtr atom() {
    skip_space();
    if (accept('(')) {
      NodePtr n = sum();
      if (!accept(')')) unexpected();
      return n;
    }
    if (pos_ >= text_.size()) unexpected();
    auto n = std::make_shared<IntExpr::Node>();
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string digits(text_.substr(start, pos_ - start));
      if (digits.size() > 18) throw ParseError("number '" + digits + "' is too large");
      n->kind = Kind::Number;
      n->number = std::stoll(digits);
      return n;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      n->kind = Kind::Name;
      n->name = std::string(text_.substr(start, pos_ - start));
      return n;
    }
    unexpected();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

void check_overflow(bool overflow) {
  if (overflow) throw std::overflow_error("grid expression overflows 64 bits");
}

std::int64_t eval_node(const IntExpr::Node& n, const Bindings& bindings) {
  std::int64_t out = 0;
  switch (n.kind) {
    case Kind::Number:
      return n.number;
    case Kind::Name:
      for (const auto& [name, value] : bindings) {
        if (name == n.name) return value;
      }
      throw std::invalid_argument("grid expression refers to unknown or later axis '" +
                                  n.name + "'");
    case Kind::Neg:
      check_overflow(__builtin_sub_overflow(std::int64_t{0}, eval_node(*n.lhs, bindings), &out));
      return out;
    case Kind::Add:
      check_overflow(__builtin_add_overflow(eval_node(*n.lhs, bindings),
                                            eval_node(*n.rhs, bindings), &out));
      return out;
    case Kind::Sub:
      check_overflow(__builtin_sub_overflow(eval_node(*n.lhs, bindings),
                                            eval_node(*n.rhs, bindings), &out));
      return out;
    case Kind::Mul:
      check_overflow(__builtin_mul_overflow(eval_node(*n.lhs, bindings),
                                            eval_node(*n.rhs, bindings), &out));
      return out;
    case Kind::Pow: {
      std::int64_t base = eval_node(*n.lhs, bindings);
      std::int64_t e = eval_node(*n.rhs, bindings);
      if (e < 0) throw std::invalid_argument("negative exponent in grid expression");
      std::int64_t acc = 1;
      for (std::int64_t i = 0; i < e; ++i) {
        check_overflow(__builtin_mul_overflow(acc, base, &acc));
      }
      return acc;
    }
  }
  return 0;
}

}  // namespace

IntExpr IntExpr::parse(std::string_view text) {
  IntExpr e;
  e.text_ = trim(text);
  if (e.text_.empty()) throw ParseError("empty expression");
  e.root_ = ExprParser(e.text_).parse();
  return e;
}

std::int64_t IntExpr::eval(const Bindings& bindings) const {
  return eval_node(*root_, bindings);
}

std::vector<std::int64_t> Axis::values(const Bindings& bindings) const {
  std::vector<std::int64_t> out;
  for (const auto& item : items) {
    std::int64_t lo = item.lo.eval(bindings);
    if (!item.hi) {
      out.push_back(lo);
      continue;
    }
    std::int64_t hi = item.hi->eval(bindings);
    std::int64_t step = item.step ? item.step->eval(bindings) : 1;
    if (step <= 0) throw std::invalid_argument("axis '" + name + "': step must be positive");
    for (std::int64_t v = lo; v <= hi; v += step) out.push_back(v);
  }
  return out;
}

GridSpec GridSpec::parse(std::string_view text) {
  GridSpec grid;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find(';', start);
    if (end == std::string_view::npos) end = text.size();
    std::string clause = trim(text.substr(start, end - start));
    start = end + 1;
    if (clause.empty()) continue;

    auto eq = clause.find('=');
    if (eq == std::string::npos) {
      throw ParseError("grid clause '" + clause + "' lacks '='");
    }
    Axis axis;
    axis.name = trim(std::string_view(clause).substr(0, eq));
    axis.text = trim(std::string_view(clause).substr(eq + 1));
    if (axis.name.empty()) throw ParseError("grid clause '" + clause + "' has no axis name");
    if (grid.find(axis.name)) throw ParseError("axis '" + axis.name + "' given twice");
    if (axis.text.empty()) throw ParseError("axis '" + axis.name + "' has no values");

    if (axis.text == "auto") {
      axis.is_auto = true;
    } else {
      std::string_view body = axis.text;
      std::size_t item_start = 0;
      while (item_start <= body.size()) {
        std::size_t comma = body.find(',', item_start);
        if (comma == std::string_view::npos) comma = body.size();
        std::string item_text = trim(body.substr(item_start, comma - item_start));
        item_start = comma + 1;
        if (item_text.empty()) throw ParseError("empty value in axis '" + axis.name + "'");
        AxisItem item;
        auto dots = item_text.find("..");
        if (dots == std::string::npos) {
          item.lo = IntExpr::parse(item_text);
        } else {
          item.lo = IntExpr::parse(std::string_view(item_text).substr(0, dots));
          std::string rest = item_text.substr(dots + 2);
          auto colon = rest.find(':');
          item.hi = IntExpr::parse(std::string_view(rest).substr(0, colon));
          if (colon != std::string::npos) {
            item.step = IntExpr::parse(std::string_view(rest).substr(colon + 1));
          }
        }
        axis.items.push_back(std::move(item));
      }
    }
    grid.axes_.push_back(std::move(axis));
  }
  if (grid.axes_.empty()) throw ParseError("empty grid specification");
  return grid;
}

const Axis* GridSpec::find(std::string_view name) const {
  for (const auto& a : axes_) {
    if (a.name == name) return &a;
  }
  return nullptr;
}

std::string GridSpec::to_string() const {
  std::string out;
  for (const auto& a : axes_) {
    if (!out.empty()) out += "; ";
    out += a.name + "=" + a.text;
  }
  return out;
}

}  // namespace suexp
