#pragma once

#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "liebider/lie_algebra.hpp"

namespace liebider {

using Multidegree = Degree;

/// A Hall tree. Letters have left = right = -1.
struct HallElement {
  int left = -1;
  int right = -1;
  int letter = -1;
  Multidegree multidegree;
  int degree = 0;
  std::string text;  // "x1", "[x1,x2]", ...
  bool is_letter() const { return letter >= 0; }
};

/// Sparse combination of Hall elements, keyed by Hall index.
using FreeLieElement = std::map<std::size_t, Scalar>;

/// Which ideal of the free algebra to build. Symmetrized: generated by
/// [[x1,f1],f2] + [[x1,f2],f1] for all f1, f2. Derived: generated by
/// [[x1,g1],g2] for g1, g2 in the derived algebra.
enum class IdealSchema { Symmetrized, Derived };

std::size_t witt_number(std::size_t generators, int degree);
/// Dimension of the multidegree component of the free Lie algebra.
std::size_t witt_number(const Multidegree& alpha);

/// Free Lie algebra on x1..xn, truncated at a total degree. The Hall order is
/// by total degree, then by the bracket string; [a,b] is a Hall element when
/// a < b and b is a letter or b = [c,d] with c <= a. Arithmetic goes through
/// the embedding into the free associative algebra.
class FreeLieAlgebra {
 public:
  FreeLieAlgebra(std::size_t generators, int max_degree, Field f = Field::rationals());

  std::size_t generators() const { return generators_; }
  int max_degree() const { return max_degree_; }
  Field field() const { return field_; }

  const std::vector<HallElement>& hall() const { return hall_; }
  /// Hall indices of the given multidegree, in Hall order.
  const std::vector<std::size_t>& component(const Multidegree& alpha) const;
  /// Number of Hall elements of each total degree 1..max_degree.
  std::vector<std::size_t> degree_counts() const;
  /// All multidegrees with total degree in 1..max_degree, by total degree then lexicographically.
  const std::vector<Multidegree>& multidegrees() const { return multidegrees_; }

  FreeLieElement generator(std::size_t i) const;
  FreeLieElement element(std::size_t hall_index) const;
  /// Parses a nested bracket string over x1..xn, e.g. "[[x1,x2],x3]".
  FreeLieElement parse(const std::string& text) const;

  /// Throws Error when the bracket would exceed max_degree.
  FreeLieElement bracket(const FreeLieElement& a, const FreeLieElement& b) const;
  std::string to_string(const FreeLieElement& a) const;

  /// Coordinates of a homogeneous element in the Hall basis of its component.
  Vector coordinates(const FreeLieElement& a, const Multidegree& alpha) const;
  FreeLieElement from_coordinates(const Vector& c, const Multidegree& alpha) const;

  /// The ideal component as a subspace of Hall coordinates. The ideal is
  /// saturated by right brackets with letters, which generates the full
  /// two-sided ideal.
  Subspace ideal_component(IdealSchema schema, const Multidegree& alpha) const;

 private:
  using Word = std::string;
  using Poly = std::map<Word, Scalar>;
  struct Component {
    std::vector<std::size_t> hall;
    std::map<Word, std::uint32_t> words;
    std::vector<SparseVector> expansions;  // per Hall element, over words
  };

  std::size_t generators_;
  int max_degree_;
  Field field_;
  std::vector<HallElement> hall_;
  std::vector<Poly> expansion_;
  std::vector<Multidegree> multidegrees_;
  std::map<Multidegree, Component> components_;
  mutable std::map<std::pair<int, Multidegree>, Subspace> ideal_cache_;

  Poly expand(const FreeLieElement& a) const;
  Multidegree multidegree_of(const FreeLieElement& a) const;
  const Component& component_data(const Multidegree& alpha) const;
  std::vector<Vector> ideal_generators(IdealSchema schema, const Multidegree& alpha) const;
};

/// Degree-truncated quotient F / (I + J + F_{> max_degree}) on three
/// generators, with a basis of Hall elements complementary to the ideal in
/// each multidegree.
struct TruncatedQuotient {
  FreeLieAlgebra free;
  LieAlgebra algebra;
  std::vector<Multidegree> basis_multidegree;
  /// Projection of a homogeneous free element to the quotient.
  Vector project(const FreeLieElement& a) const;

  std::map<Multidegree, QuotientMaps> maps;
  std::map<Multidegree, std::size_t> offset;
};

TruncatedQuotient truncated_quotient(int max_degree = 5);

struct JkReport {
  std::size_t symmetrized_dim = 0;   // I in multidegree (1,1,3)
  std::size_t derived_dim = 0;       // J in multidegree (1,1,3)
  bool listed_independent = false;  // the four left-normed monomials
  bool listed_span_symmetrized = false;
  bool target_outside = false;       // [[[[x1,x2],x3],x3],x3] not in I + J
  bool holds() const { return listed_independent && target_outside; }
};

JkReport check_eq_jk_report();
bool check_eq_jk();

}  // namespace liebider
