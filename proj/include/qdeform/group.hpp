#ifndef QDEFORM_GROUP_HPP
#define QDEFORM_GROUP_HPP

// Finite abelian groups prod Z/m_j acting diagonally on V = span(x_1..x_n),
// and multiplicative two-cocycles on them.

#include "qdeform/check.hpp"
#include "qdeform/scalar.hpp"

#include <compare>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qdeform {

using IntMatrix = std::vector<std::vector<int>>;

/// Exponent vector (a_1..a_k) of h_1^{a_1} ... h_k^{a_k}, reduced mod the orders.
struct GroupElement {
  std::vector<int> exponents;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
  friend bool operator==(const GroupElement&, const GroupElement&) = default;

  std::string str() const {
    std::string s = "g(";
    for (std::size_t j = 0; j < exponents.size(); ++j) {
      if (j) s += ",";
      s += std::to_string(exponents[j]);
    }
    return s + ")";
  }
};

/// G = prod Z/m_j with generator h_j scaling x_i by zeta_N^{action[j][i]}.
///
/// Elements are numbered 0..|G|-1 in mixed radix with the first exponent most
/// significant, so index order equals lexicographic order on exponents.
/// Multiplication, inverse and character tables are precomputed.
class GroupSpec {
public:
  GroupSpec(std::vector<int> orders, int dimension, IntMatrix action, ScalarField field)
      : orders_(std::move(orders)), n_(dimension), action_(std::move(action)), field_(field) {
    if (!field_.is_cyclotomic()) throw std::invalid_argument("[group] needs a cyclotomic scalar field");
    if (n_ < 0) throw std::invalid_argument("[space] n must be nonnegative");
    const int N = field_.root_order();
    for (int m : orders_) {
      if (m < 1) throw std::invalid_argument("[group] orders: orders must be positive");
      if (N % m != 0) throw std::invalid_argument("[group] orders: order " + std::to_string(m) +
                                                  " does not divide root order " + std::to_string(N));
    }
    if (action_.size() != orders_.size()) throw std::invalid_argument("[group] action: need one row per generator");
    for (std::size_t j = 0; j < action_.size(); ++j) {
      if (static_cast<int>(action_[j].size()) != n_)
        throw std::invalid_argument("[group] action: row " + std::to_string(j + 1) + " must have n entries");
      for (int i = 0; i < n_; ++i) {
        if ((static_cast<long long>(orders_[j]) * action_[j][i]) % N != 0)
          throw std::invalid_argument("[group] action: generator " + std::to_string(j + 1) +
                                      " has an eigenvalue whose order does not divide its group order");
      }
    }
    size_ = 1;
    for (int m : orders_) size_ *= m;
    build_tables();
  }

  int rank() const { return static_cast<int>(orders_.size()); }
  int dimension() const { return n_; }
  int size() const { return size_; }
  const std::vector<int>& orders() const { return orders_; }
  const IntMatrix& action() const { return action_; }
  ScalarField field() const { return field_; }
  int root_order() const { return field_.root_order(); }

  int identity() const { return 0; }
  int mul(int a, int b) const { return mul_[a * size_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int generator(int j) const {
    GroupElement e{std::vector<int>(orders_.size(), 0)};
    e.exponents[j] = 1 % orders_[j];
    return index(e);
  }

  GroupElement element(int idx) const {
    GroupElement e{std::vector<int>(orders_.size(), 0)};
    for (int j = rank() - 1; j >= 0; --j) {
      e.exponents[j] = idx % orders_[j];
      idx /= orders_[j];
    }
    return e;
  }

  int index(const GroupElement& e) const {
    if (e.exponents.size() != orders_.size()) throw std::invalid_argument("group element has wrong rank");
    int idx = 0;
    for (int j = 0; j < rank(); ++j) idx = idx * orders_[j] + ((e.exponents[j] % orders_[j]) + orders_[j]) % orders_[j];
    return idx;
  }

  /// Exponent c with h(x_i) = zeta^c x_i, reduced into [0, N).
  int character_exponent(int h, int i) const { return char_[h * n_ + i]; }
  const Scalar& zeta(int k) const {
    const int N = root_order();
    return zeta_pows_[((k % N) + N) % N];
  }
  /// The eigenvalue x_i(h) of h on x_i.
  const Scalar& character_value(int h, int i) const { return zeta(character_exponent(h, i)); }
  Scalar character_value(const GroupElement& h, int i) const { return character_value(index(h), i); }

  /// Exponent of zeta in h(x^m) = zeta^c x^m.
  int monomial_character_exponent(int h, const std::vector<int>& exps) const {
    long long c = 0;
    for (int i = 0; i < n_; ++i) c += static_cast<long long>(exps[i]) * char_[h * n_ + i];
    const int N = root_order();
    return static_cast<int>(((c % N) + N) % N);
  }

  int determinant_exponent(int h) const {
    int c = 0;
    for (int i = 0; i < n_; ++i) c += char_[h * n_ + i];
    return c % root_order();
  }
  Scalar determinant(int h) const { return zeta(determinant_exponent(h)); }

  /// Coordinates i with x_i(h) = 1.
  std::vector<int> fixed_coordinates(int h) const {
    std::vector<int> out;
    for (int i = 0; i < n_; ++i)
      if (char_[h * n_ + i] == 0) out.push_back(i);
    return out;
  }

private:
  void build_tables() {
    const int N = root_order();
    zeta_pows_.reserve(N);
    for (int k = 0; k < N; ++k) zeta_pows_.push_back(zeta_power(field_, k));
    mul_.resize(static_cast<std::size_t>(size_) * size_);
    inv_.resize(size_);
    char_.resize(static_cast<std::size_t>(size_) * n_);
    std::vector<GroupElement> elems;
    elems.reserve(size_);
    for (int a = 0; a < size_; ++a) elems.push_back(element(a));
    for (int a = 0; a < size_; ++a) {
      for (int b = 0; b < size_; ++b) {
        GroupElement p{std::vector<int>(orders_.size())};
        for (int j = 0; j < rank(); ++j) p.exponents[j] = (elems[a].exponents[j] + elems[b].exponents[j]) % orders_[j];
        mul_[a * size_ + b] = index(p);
      }
      GroupElement v{std::vector<int>(orders_.size())};
      for (int j = 0; j < rank(); ++j) v.exponents[j] = (orders_[j] - elems[a].exponents[j]) % orders_[j];
      inv_[a] = index(v);
      for (int i = 0; i < n_; ++i) {
        long long c = 0;
        for (int j = 0; j < rank(); ++j) c += static_cast<long long>(elems[a].exponents[j]) * action_[j][i];
        char_[a * n_ + i] = static_cast<int>(((c % N) + N) % N);
      }
    }
  }

  std::vector<int> orders_;
  int n_;
  IntMatrix action_;
  ScalarField field_;
  int size_ = 1;
  std::vector<int> mul_, inv_, char_;
  std::vector<Scalar> zeta_pows_;
};

/// A normalized two-cocycle alpha: G x G -> nonzero scalars, stored as a full table.
class TwoCocycle {
public:
  enum class Kind { bicharacter, table };

  static TwoCocycle trivial(const GroupSpec& G) {
    return bicharacter(G, IntMatrix(G.rank(), std::vector<int>(G.rank(), 0)));
  }

  /// alpha(g^a, g^b) = zeta^{a^T B b}, exponents taken in [0, m_j).
  static TwoCocycle bicharacter(const GroupSpec& G, IntMatrix B) {
    const int k = G.rank();
    const int N = G.root_order();
    if (static_cast<int>(B.size()) != k) throw std::invalid_argument("[cocycle] bicharacter: need k rows");
    for (int r = 0; r < k; ++r) {
      if (static_cast<int>(B[r].size()) != k) throw std::invalid_argument("[cocycle] bicharacter: need k columns");
      for (int c = 0; c < k; ++c) {
        // Well defined on Z/m_r x Z/m_c only if both reductions are invisible.
        if ((static_cast<long long>(G.orders()[r]) * B[r][c]) % N != 0 ||
            (static_cast<long long>(G.orders()[c]) * B[r][c]) % N != 0)
          throw std::invalid_argument("[cocycle] bicharacter: entry (" + std::to_string(r + 1) + "," +
                                      std::to_string(c + 1) + ") is not well defined on the group");
      }
    }
    TwoCocycle a;
    a.kind_ = Kind::bicharacter;
    a.bilinear_ = B;
    a.size_ = G.size();
    a.values_.reserve(static_cast<std::size_t>(G.size()) * G.size());
    for (int g = 0; g < G.size(); ++g) {
      const auto eg = G.element(g).exponents;
      for (int h = 0; h < G.size(); ++h) {
        const auto eh = G.element(h).exponents;
        long long e = 0;
        for (int r = 0; r < k; ++r)
          for (int c = 0; c < k; ++c) e += static_cast<long long>(eg[r]) * B[r][c] * eh[c];
        a.values_.push_back(G.zeta(static_cast<int>(((e % N) + N) % N)));
      }
    }
    return a;
  }

  /// Explicit table; entries not listed default to 1. When validate is set,
  /// normalization and the cocycle identity are checked over all triples.
  static TwoCocycle table(const GroupSpec& G, const std::map<std::pair<int, int>, Scalar>& entries,
                          bool validate = true);

  Kind kind() const { return kind_; }
  const IntMatrix& bicharacter_matrix() const { return bilinear_; }
  int group_size() const { return size_; }

  const Scalar& operator()(int g, int h) const { return values_[g * size_ + h]; }

private:
  Kind kind_ = Kind::table;
  IntMatrix bilinear_;
  int size_ = 0;
  std::vector<Scalar> values_;
};

/// Exhaustive check of alpha(g,h) alpha(gh,k) = alpha(g,hk) alpha(h,k) and
/// of normalization alpha(1,g) = alpha(g,1) = 1.
inline CheckResult cocycle_check(const TwoCocycle& alpha, const GroupSpec& G) {
  const std::string name = "two-cocycle identity";
  const int e = G.identity();
  for (int g = 0; g < G.size(); ++g) {
    if (!alpha(e, g).is_one() || !alpha(g, e).is_one())
      return CheckResult::fail(name, {"normalization at " + G.element(g).str(), alpha(e, g).str(), alpha(g, e).str()});
  }
  for (int g = 0; g < G.size(); ++g)
    for (int h = 0; h < G.size(); ++h)
      for (int k = 0; k < G.size(); ++k) {
        Scalar lhs = alpha(g, h) * alpha(G.mul(g, h), k);
        Scalar rhs = alpha(g, G.mul(h, k)) * alpha(h, k);
        if (!(lhs == rhs))
          return CheckResult::fail(
              name, {"(g,h,k) = (" + G.element(g).str() + ", " + G.element(h).str() + ", " + G.element(k).str() + ")",
                     lhs.str(), rhs.str()});
      }
  return CheckResult::pass(name);
}

inline TwoCocycle TwoCocycle::table(const GroupSpec& G, const std::map<std::pair<int, int>, Scalar>& entries,
                                    bool validate) {
  TwoCocycle a;
  a.kind_ = Kind::table;
  a.size_ = G.size();
  a.values_.assign(static_cast<std::size_t>(G.size()) * G.size(), Scalar(G.field(), 1));
  for (const auto& [key, v] : entries) {
    if (!(v.field() == G.field())) throw FieldMismatch();
    if (v.is_zero()) throw std::invalid_argument("[cocycle] table: values must be nonzero");
    a.values_[key.first * G.size() + key.second] = v;
  }
  if (validate) {
    CheckResult r = cocycle_check(a, G);
    if (!r) throw std::invalid_argument("[cocycle] table fails the two-cocycle identity at " + r.witness->input);
  }
  return a;
}

/// alpha(g,h) = alpha(h,g) for all pairs. For abelian G a failure proves
/// alpha is not a coboundary.
inline CheckResult is_symmetric(const TwoCocycle& alpha, const GroupSpec& G) {
  const std::string name = "cocycle symmetry";
  for (int g = 0; g < G.size(); ++g)
    for (int h = g + 1; h < G.size(); ++h)
      if (!(alpha(g, h) == alpha(h, g)))
        return CheckResult::fail(name, {"(g,h) = (" + G.element(g).str() + ", " + G.element(h).str() + ")",
                                        alpha(g, h).str(), alpha(h, g).str()});
  return CheckResult::pass(name);
}

/// Searches for beta with alpha(g,h) = beta(g) beta(h) / beta(gh), where beta
/// takes zeta_N-power values on the generators. beta is then forced on all of
/// G by beta(g h_j) = beta(g) beta(h_j) / alpha(g, h_j). Returns beta by index.
inline std::optional<std::vector<Scalar>> find_coboundary(const TwoCocycle& alpha, const GroupSpec& G) {
  if (G.size() > 64) throw std::invalid_argument("coboundary search limited to |G| <= 64");
  const int k = G.rank();
  const int N = G.root_order();
  std::vector<int> choice(k, 0);
  std::vector<int> gens(k);
  for (int j = 0; j < k; ++j) gens[j] = G.generator(j);
  for (;;) {
    std::vector<std::optional<Scalar>> beta(G.size());
    beta[G.identity()] = Scalar(G.field(), 1);
    bool consistent = true;
    std::vector<int> queue{G.identity()};
    for (std::size_t qi = 0; qi < queue.size() && consistent; ++qi) {
      const int g = queue[qi];
      for (int j = 0; j < k && consistent; ++j) {
        const int gh = G.mul(g, gens[j]);
        Scalar v = *beta[g] * G.zeta(choice[j]) / alpha(g, gens[j]);
        if (!beta[gh]) {
          beta[gh] = v;
          queue.push_back(gh);
        } else if (!(*beta[gh] == v)) {
          consistent = false;
        }
      }
    }
    if (consistent) {
      std::vector<Scalar> values;
      for (auto& b : beta) values.push_back(*b);
      bool ok = true;
      for (int g = 0; g < G.size() && ok; ++g)
        for (int h = 0; h < G.size() && ok; ++h)
          ok = alpha(g, h) * values[G.mul(g, h)] == values[g] * values[h];
      if (ok) return values;
    }
    int j = 0;
    while (j < k && ++choice[j] == N) choice[j++] = 0;
    if (j == k) return std::nullopt;
  }
}

/// The data of a rank-n example built from the diagonal matrices
/// g_i = diag(.., q, q^{-1}, ..) acting on slots (i, i+1), plus g_n.
struct FactorSeed {
  GroupElement g;
  int i;  // coordinate scaled by q
  int j;  // coordinate scaled by q^{-1}
};

struct CyclicChainFixture {
  GroupSpec group;
  TwoCocycle alpha;
  std::vector<FactorSeed> seeds;  // g_1..g_n with pairs (i, i+1 mod n), 0-based
};

/// G = (Z/l)^{n-1} generated by g_1..g_{n-1}, q = zeta_l, with the cocycle
/// alpha(g^a, g^b) = q^{-sum_{k<=n-2} a_k b_{k+1}}.
inline CyclicChainFixture cyclic_chain_fixture(int n, int ell) {
  if (n < 3 || ell < 2) throw std::invalid_argument("fixture needs n >= 3 and l >= 2");
  const int k = n - 1;
  IntMatrix action(k, std::vector<int>(n, 0));
  for (int j = 0; j < k; ++j) {
    action[j][j] = 1;
    action[j][j + 1] = -1;
  }
  GroupSpec G(std::vector<int>(k, ell), n, action, ScalarField::cyclotomic(ell));
  IntMatrix B(k, std::vector<int>(k, 0));
  for (int r = 0; r + 1 < k; ++r) B[r][r + 1] = -1;
  TwoCocycle alpha = TwoCocycle::bicharacter(G, B);
  std::vector<FactorSeed> seeds;
  for (int j = 0; j < k; ++j) seeds.push_back({G.element(G.generator(j)), j, j + 1});
  // g_n = (g_1 ... g_{n-1})^{-1} = diag(q^{-1}, 1, ..., 1, q)
  seeds.push_back({GroupElement{std::vector<int>(k, ell - 1)}, n - 1, 0});
  return {std::move(G), std::move(alpha), std::move(seeds)};
}

}  // namespace qdeform

#endif  // QDEFORM_GROUP_HPP
