#pragma once

#include <memory>
#include <string>

#include "cheegerlab/errors.hpp"

namespace cheegerlab {

namespace detail {
struct ExprNode;
}

// Arithmetic expression over x and y with +,-,*,/,^ and abs, min, max, exp,
// sin, cos, evaluated at cell centers.
class Expression {
 public:
  // `line` seeds the position reported in ParseError.
  static Expression parse(const std::string& text, int line = 0);

  double eval(double x, double y) const;
  const std::string& text() const { return text_; }

 private:
  Expression() = default;
  std::string text_;
  std::shared_ptr<const detail::ExprNode> root_;
};

}  // namespace cheegerlab
