#pragma once

#include <optional>
#include <string>
#include <vector>

#include "clockwork/diagram.hpp"
#include "clockwork/polyring.hpp"
#include "clockwork/statesum.hpp"

namespace clockwork {

// n x (n+2) matrix: entry(i,j) sums the weights of crossing i's corners that
// lie in region j. Rows ordered by crossing id, columns by region id.
struct AlexanderMatrix {
  SchemeKind kind{SchemeKind::Formal};
  std::vector<std::vector<LaurentPoly>> entry;  // [crossing id-1][region id-1]

  int rows() const { return static_cast<int>(entry.size()); }
  int cols() const { return entry.empty() ? 0 : static_cast<int>(entry[0].size()); }
};

AlexanderMatrix alexander_matrix(const Diagram& d, const WeightScheme& w);

using PolyMatrix = std::vector<std::vector<LaurentPoly>>;

// Deletes the two columns holding regions i1 and i2 (1-based region ids).
PolyMatrix reduced(const AlexanderMatrix& a, int region_i1, int region_i2);

// Exact determinant by cofactor expansion memoized on column subsets.
LaurentPoly det(const PolyMatrix& m);

std::string matrix_to_json(const AlexanderMatrix& a);

// Column labeling satisfying the sign-law hypotheses: the base star pair
// occupies the last two positions with the lower-index region at n+1, and
// rows 1,2 are swapped if needed so the base determinant equals the base
// state sum exactly.
struct DetLabeling {
  std::vector<int> region_order;  // position (1-based) -> region id
  bool rows_swapped{false};
  int position_of(int region_id) const;
};

// Throws InvariantError if no compliant labeling exists.
DetLabeling build_compliant_labeling(const Diagram& d, const WeightScheme& w,
                                     const StarPair& base, const Conventions& conv = {});

// Determinant of the matrix in labeled column order with positions i<j
// deleted (and the labeling's row swap applied).
LaurentPoly labeled_det(const Diagram& d, const AlexanderMatrix& a,
                        const DetLabeling& lab, int pos_i, int pos_j);

// Predicted sign s with det = s * state_sum for the adjacent pair at
// positions i<j: (-1)^(i+j+1) when the higher-index region sits at position
// j, (-1)^(i+j) otherwise.
int signed_det_relation(const Diagram& d, const DetLabeling& lab, int pos_i, int pos_j);

// Column relations. For the B/W matrix, beta(j,k) = a^(m(j)-m(k)) -
// a^(k-j exponent negated) lives in Z[B,W][a]/(a^2+(B+W)a+1); for the
// link-variable matrix beta' is an honest Laurent polynomial. Either check
// returns a witness string on failure.
std::optional<std::string> bw_column_relation_witness(const Diagram& d,
                                                      const AlexanderMatrix& bw);
std::optional<std::string> linkvar_column_relation_witness(const Diagram& d,
                                                           const AlexanderMatrix& lv);

}  // namespace clockwork
