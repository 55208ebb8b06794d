#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "qsing/cyclotomic.hpp"
#include "qsing/matrix.hpp"
#include "qsing/rational.hpp"

namespace qsing {

inline constexpr std::size_t kDefaultMaxOrder = 20000;

// Diagonal shorthand 1/d(a1,...,an) for diag(zeta_d^a1, ..., zeta_d^an).
// Exponents are stored reduced into [0, d).
struct DiagonalSpec {
  int d = 1;
  std::vector<int> a;

  // Grammar: "1/" d "(" a1 "," ... "," an ")" with optional whitespace.
  // Exponents may be negative. Throws InputError naming the offending position.
  static DiagonalSpec parse(std::string_view text);
  static DiagonalSpec make(int d, std::vector<long long> exponents);

  std::size_t dimension() const noexcept { return a.size(); }
  bool is_special() const;  // sum of exponents divisible by d
  FieldMatrix matrix() const;
  std::string to_string() const;
};

struct GroupSpec {
  std::string name;
  int conductor = 1;
  std::vector<FieldMatrix> generators;
  std::optional<DiagonalSpec> diag;

  static GroupSpec from_diag(std::string_view text);
  // Explicit generators followed by the expanded diagonal generator, if any.
  std::vector<FieldMatrix> all_generators() const;
  std::size_t dimension() const;
};

// A fully enumerated finite subgroup of GL(n). Elements share one conductor
// and are sorted lexicographically by their coefficient vectors.
class MatrixGroup {
 public:
  // Breadth-first closure. Throws GroupTooLarge past max_order and
  // InputError for singular or mis-shaped generators.
  static MatrixGroup closure(const std::vector<FieldMatrix>& generators,
                             std::size_t max_order = kDefaultMaxOrder);
  static MatrixGroup closure(const GroupSpec& spec, std::size_t max_order = kDefaultMaxOrder);

  std::size_t order() const noexcept { return elements_.size(); }
  std::size_t dimension() const noexcept { return dim_; }
  int conductor() const noexcept { return conductor_; }
  const std::vector<FieldMatrix>& elements() const noexcept { return elements_; }
  const FieldMatrix& element(std::size_t i) const { return elements_.at(i); }
  const std::vector<FieldMatrix>& generators() const noexcept { return generators_; }
  // Indices of the generators in the element list.
  const std::vector<std::size_t>& generator_indices() const noexcept { return generator_indices_; }

  std::optional<std::size_t> index_of(const FieldMatrix& m) const;
  std::size_t identity_index() const noexcept { return identity_; }
  std::size_t multiply(std::size_t i, std::size_t j) const;
  std::size_t inverse_index(std::size_t i) const { return inverse_.at(i); }
  std::size_t power(std::size_t i, long long k) const;
  int element_order(std::size_t i) const { return order_.at(i); }
  const Cyclotomic& determinant(std::size_t i) const { return det_.at(i); }
  bool is_special() const;  // every determinant is 1
  bool is_abelian() const noexcept { return abelian_; }

  // Conjugacy classes, each sorted ascending; classes ordered by their least
  // element, which is the canonical representative.
  const std::vector<std::vector<std::size_t>>& classes() const noexcept { return classes_; }
  std::size_t class_count() const noexcept { return classes_.size(); }
  std::size_t class_of(std::size_t i) const { return class_of_.at(i); }
  std::size_t class_representative(std::size_t c) const { return classes_.at(c).front(); }

  // {h : h g = g h} by direct commutation test; throws InputError if g is not
  // an element.
  std::vector<std::size_t> centralizer(std::size_t g) const;
  std::vector<std::size_t> centralizer(const FieldMatrix& g) const;

  // Throws InputError unless the indices form a subgroup.
  void require_subgroup(const std::vector<std::size_t>& sub) const;
  bool is_normal(const std::vector<std::size_t>& sub) const;

 private:
  MatrixGroup() = default;
  void finish();

  std::size_t dim_ = 0;
  int conductor_ = 1;
  std::vector<FieldMatrix> generators_;
  std::vector<std::size_t> generator_indices_;
  std::vector<FieldMatrix> elements_;
  std::unordered_map<FieldMatrix, std::size_t> index_;
  std::vector<Cyclotomic> det_;
  std::vector<std::size_t> inverse_;
  std::vector<int> order_;
  std::vector<std::vector<std::size_t>> classes_;
  std::vector<std::size_t> class_of_;
  std::size_t identity_ = 0;
  bool abelian_ = true;
};

// Eigenvalue data of a finite-order element: eigenvalues zeta_r^a_i with
// 0 <= a_i < r, listed in ascending order.
struct AgeProfile {
  int order = 1;
  std::vector<int> exponents;
  Rational age;
  std::size_t fixed_dimension() const;
};

// Uses the character multiplicity formula
//   mult(zeta_r^j) = (1/r) sum_k tr(g^k) zeta_r^{-jk},
// with a shortcut for diagonal matrices of roots of unity.
AgeProfile element_age(const FieldMatrix& g);
// Same, with the multiplicity formula forced (used to cross-check the shortcut).
AgeProfile element_age_by_characters(const FieldMatrix& g);
// Profiles of the class representatives, in class order.
std::vector<AgeProfile> class_ages(const MatrixGroup& g);

enum class Classification { smooth, terminal, canonical_not_terminal, not_canonical, not_gorenstein };
std::string to_string(Classification c);

struct ReidTaiResult {
  Classification kind = Classification::terminal;
  std::vector<std::string> warnings;  // e.g. pseudo-reflections present
};

ReidTaiResult reid_tai_classify(const MatrixGroup& g);
std::size_t weight_one_class_count(const MatrixGroup& g);

bool contains_center(const MatrixGroup& g, std::size_t n);
bool contains_center(const MatrixGroup& g);

struct DhvwEuler {
  Integer euler;                          // |Cl(G)|
  std::vector<std::size_t> fixed_dims;    // dim V^g per class; each quotient is contractible
  Integer commuting_pairs;                // #{(g,h) : gh = hg}
  bool burnside_ok = false;               // commuting_pairs == |G| * |Cl(G)|
};

DhvwEuler dhvw_euler_linear(const MatrixGroup& g);

// Sorted descending dimensions of the irreducible summands, or nullopt when
// the invariant-subspace scan fails to split a reducible representation.
std::optional<std::vector<int>> module_type(const MatrixGroup& g);
std::string module_type_string(const std::optional<std::vector<int>>& t);

struct LineStabilizer {
  std::vector<std::size_t> stabilizer;   // elements acting as 1 on the line
  std::vector<Cyclotomic> character;     // scalar by which each element acts on the line
  std::size_t quotient_order = 1;        // |G / G_eta|
  std::size_t generator = 0;             // least element acting on the line by zeta_q, q = quotient_order
  bool quotient_cyclic = true;
};

// Throws InputError if the line is not invariant.
LineStabilizer generic_line_stabilizer(const MatrixGroup& g, const std::vector<Cyclotomic>& line);

struct ClassMap {
  std::size_t quotient_order = 0;
  std::vector<std::size_t> coset_representatives;  // ascending
  std::vector<std::size_t> fibers;                 // G-classes over each coset
  std::size_t class_count = 0;                     // |Cl(G)|
};

// N must be a normal subgroup with cyclic quotient; otherwise InputError.
ClassMap induced_class_map(const MatrixGroup& g, const std::vector<std::size_t>& normal);

struct PrimedGroup {
  MatrixGroup group;                  // G' in SL(n-1)
  FieldMatrix basis;                  // columns: complement basis, then the line
  FieldMatrix h_prime;
  Cyclotomic lambda;
  std::size_t stabilizer_order = 0;   // |G_eta|
  std::size_t quotient_order = 0;     // |C'| = |G'| / |G_eta|
  std::vector<std::size_t> stabilizer_in_prime;  // image of G_eta inside G'
  std::string note;
};

PrimedGroup primed_group(const MatrixGroup& g, const std::vector<Cyclotomic>& line,
                         std::size_t max_order = kDefaultMaxOrder);

// Permutation sigma with sigma[i] = column of the nonzero entry of row i
// (0-based), or nullopt when the matrix is not monomial.
std::optional<std::vector<int>> monomial_permutation_part(const FieldMatrix& g);
std::string cycle_notation(const std::vector<int>& perm);
int permutation_sign(const std::vector<int>& perm);

struct ProjectiveFixedLocus {
  std::vector<std::size_t> component_dims;  // joint eigenspace dimensions, descending
  Integer euler;                            // sum of component_dims
};

// Fixed locus in P(C^N) of the commuting matrices h; InputError otherwise.
ProjectiveFixedLocus projective_fixed_euler(const std::vector<FieldMatrix>& h);

// Splits a block-diagonal change of basis: returns s^{-1} g s.
FieldMatrix conjugate_by(const FieldMatrix& g, const FieldMatrix& s, const FieldMatrix& s_inv);

// The matrices T and R used for monomial SL(3) groups.
FieldMatrix matrix_T(int conductor = 1);
FieldMatrix matrix_R(int conductor = 1);
FieldMatrix scalar_matrix(std::size_t n, const Cyclotomic& c);

}  // namespace qsing
