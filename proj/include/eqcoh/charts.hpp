#ifndef EQCOH_CHARTS_HPP
#define EQCOH_CHARTS_HPP

#include <string>
#include <vector>

#include "eqcoh/liealg.hpp"
#include "eqcoh/matrix.hpp"
#include "eqcoh/ring.hpp"

namespace eqcoh {

// Variety descriptor: the open cell of the nilpotent fixed point together
// with its coordinates and grading weights.
//  - ProjectiveSpace(n): chart x_i = z_i/z_0, ambient sl_{n+1}
//  - Grassmannian(k,n): chart [I_k; X], ambient sl_n
//  - PartialFlag(dims,n): block-lower-unitriangular chart, ambient sl_n
//  - BottSamelson(word, rank): one coordinate per letter, ambient sl_{rank+1}
struct ChartDescriptor {
  enum class Kind { ProjectiveSpace, Grassmannian, PartialFlag, BottSamelson };
  Kind kind = Kind::ProjectiveSpace;
  int n = 1;                  // pn dimension / gr & flag ambient size
  int k = 0;                  // gr only
  std::vector<int> dims;      // flag subspace dimensions
  std::vector<int> word;      // bs simple-root letters
  int rank = 0;               // bs ambient rank (sl_{rank+1})

  int ambient_matrix_size() const;  // n of the acting sl_n
  int dimension() const;            // number of cell coordinates
  std::vector<std::string> cell_names() const;
  std::string str() const;
};

// Grammar: "pn:4", "gr:2,4", "flag:3", "bs:1,2,1@sl3".
ChartDescriptor parse_chart(const std::string& text);

// Vector field of the infinitesimal action of a (symbolic) ambient matrix on
// the open cell: one polynomial per cell coordinate, in ctx. Rejects
// Bott-Samelson charts (those use bs_vector_field).
std::vector<Polynomial> vector_field(const ChartDescriptor& chart, const PolyMat& acting,
                                     const RingPtr& ctx);

// Same field for the Grassmannian via the generic block-flag machinery, used
// to cross-check the Riccati closed form.
std::vector<Polynomial> grassmannian_field_via_flag(const ChartDescriptor& chart,
                                                    const PolyMat& acting, const RingPtr& ctx);

// Bott-Samelson field of e + w for the symbolic torus element w: component
// j is -sum_{k<j} b_{jk} x_k x_j - alpha_{i_j}(w) x_j - x_j^2 with
// b_{jk} = alpha_{i_j}(h_{i_k}). ctx must hold v1..v_rank and x1..x_l.
std::vector<Polynomial> bs_vector_field(const std::vector<int>& word, int rank,
                                        const RingPtr& ctx);

// Weights a_i read off from V_h (engine convention V_h(x_i) = -a_i x_i).
// Throws MathError if V_h is not diagonal-linear or some a_i <= 0.
std::vector<int> bb_weights(const ChartDescriptor& chart);

// Euler characteristic = number of torus-fixed points.
long long euler_characteristic(const ChartDescriptor& chart);

}  // namespace eqcoh

#endif
