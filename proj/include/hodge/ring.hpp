#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hodge/rational.hpp"

namespace hodge {

inline constexpr int kMaxVars = 24;
inline constexpr int kMaxExponent = 255;

class RingCtx;
using Ring = std::shared_ptr<const RingCtx>;

// Named graded polynomial ring context. Variables carry positive integer
// weights (default 1). Ring identity is by object, not by name list.
class RingCtx {
 public:
  static Ring make(std::vector<std::string> names, std::vector<int> weights = {});

  int nvars() const { return static_cast<int>(names_.size()); }
  const std::string& var_name(int i) const { return names_[i]; }
  const std::vector<std::string>& var_names() const { return names_; }
  int weight(int i) const { return weights_[i]; }
  bool all_weights_one() const { return all_one_; }
  int var_index(const std::string& name) const;

  // Ring with one fresh variable appended (used by elimination).
  static Ring extend(const Ring& r, const std::string& name, int weight = 1);

 private:
  RingCtx() = default;
  std::vector<std::string> names_;
  std::vector<int> weights_;
  bool all_one_ = true;
};

// Exponent vector with cached weighted degree. Entries beyond the ring's
// variable count stay zero, so equality can compare the whole array.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};
  int deg = 0;

  bool is_one() const { return deg == 0; }
  // Order-agnostic total order (exponents lexicographically); lets
  // monomials key maps. Not a monomial order.
  auto operator<=>(const Monomial&) const = default;

  static Monomial one() { return {}; }
  static Monomial var(const RingCtx& r, int i, int exp = 1);
  static Monomial from_exponents(const RingCtx& r, const std::vector<int>& exps);

  static Monomial mul(const Monomial& a, const Monomial& b);
  // a divides b
  static bool divides(const Monomial& a, const Monomial& b, int nvars);
  // b / a, requires divisibility
  static Monomial quotient(const Monomial& b, const Monomial& a);
  static Monomial lcm(const RingCtx& r, const Monomial& a, const Monomial& b);
  static bool coprime(const Monomial& a, const Monomial& b, int nvars);

  int total_exponent() const;  // unweighted degree
  std::string str(const RingCtx& r) const;
};

enum class OrderKind { Degrevlex, Lex, Block };

// Monomial order. Degrevlex refines the weighted grading; Block is the
// product order whose dominant block is the variable tail [block_start, n),
// compared degrevlex, with degrevlex on the head as tiebreak (an elimination
// order for the tail variables).
struct MonomialOrder {
  OrderKind kind = OrderKind::Degrevlex;
  int block_start = 0;

  static MonomialOrder degrevlex() { return {OrderKind::Degrevlex, 0}; }
  static MonomialOrder lex() { return {OrderKind::Lex, 0}; }
  static MonomialOrder block(int start) { return {OrderKind::Block, start}; }

  bool operator==(const MonomialOrder&) const = default;

  // >0 if a > b, 0 if equal, <0 if a < b.
  int cmp(const Monomial& a, const Monomial& b, const RingCtx& ring) const;
  bool greater(const Monomial& a, const Monomial& b, const RingCtx& ring) const {
    return cmp(a, b, ring) > 0;
  }
  std::string str() const;
};

}  // namespace hodge
