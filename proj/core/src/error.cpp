#include "sgx/error.hpp"

#include <sstream>

namespace sgx {

  namespace {
    template <typename... Args>
    std::string concat(Args const&... args) {
      std::ostringstream out;
      (out << ... << args);
      return out.str();
    }
  }  // namespace

  AssociativityViolation::AssociativityViolation(std::size_t x_,
                                                 std::size_t y_,
                                                 std::size_t z_)
      : Error(concat("associativity fails at (x, y, z) = (",
                     x_, ", ", y_, ", ", z_, ")")),
        x(x_),
        y(y_),
        z(z_) {}

  CompatibilityViolation::CompatibilityViolation(std::string const& what,
                                                 std::size_t        a_,
                                                 std::size_t        s_,
                                                 std::size_t        t_)
      : Error(concat(what, " compatibility fails at (", a_, ", ", s_, ", ", t_, ")")),
        a(a_),
        s(s_),
        t(t_) {}

  EquivarianceViolation::EquivarianceViolation(std::size_t a_, std::size_t s_)
      : Error(concat("map is not equivariant at point ", a_, ", element ", s_)),
        a(a_),
        s(s_) {}

  NotMultiplicative::NotMultiplicative(std::size_t x_, std::size_t y_)
      : Error(concat("f(xy) != f(x)f(y) at (x, y) = (", x_, ", ", y_, ")")),
        x(x_),
        y(y_) {}

  SearchSpaceTooLarge::SearchSpaceTooLarge(double candidates, std::size_t limit)
      : Error(concat("search space of ", candidates,
                     " candidates exceeds the limit ", limit)) {}

  NotBalanced::NotBalanced(std::size_t a_, std::size_t s_, std::size_t b_)
      : Error(concat("map is not balanced: f(a.s, b) != f(a, s.b) at (a, s, b) = (",
                     a_, ", ", s_, ", ", b_, ")")),
        a(a_),
        s(s_),
        b(b_) {}

  BiactLawViolation::BiactLawViolation(std::string const& side,
                                       std::size_t        s_,
                                       std::size_t        p_,
                                       std::size_t        q_)
      : Error(concat("pairing is not a biact morphism (", side,
                     " law) at (s, p, q) = (", s_, ", ", p_, ", ", q_, ")")),
        s(s_),
        p(p_),
        q(q_) {}

  ParseError::ParseError(std::string const& file_,
                         std::size_t        line_,
                         std::string const& why)
      : Error(concat(file_, ":", line_, ": ", why)), file(file_), line(line_) {}

}  // namespace sgx
