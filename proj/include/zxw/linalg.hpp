#pragma once

// Dense exact matrices over D[w]. A matrix of type n -> m has 2^m rows
// (outputs) and 2^n columns (inputs); the leftmost wire is the most
// significant bit of an index.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "zxw/ring.hpp"

namespace zxw {

class DimensionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class RingMatrix {
 public:
  RingMatrix() : RingMatrix(0, 0) {}
  RingMatrix(unsigned out_wires, unsigned in_wires);

  static RingMatrix identity(unsigned wires);
  static RingMatrix scalar(const Cyclotomic& s);
  /// 2^out x 2^in from explicit rows.
  static RingMatrix from_rows(unsigned out_wires, unsigned in_wires,
                              const std::vector<std::vector<Cyclotomic>>& rows);

  unsigned out_wires() const { return out_; }
  unsigned in_wires() const { return in_; }
  std::size_t rows() const { return std::size_t{1} << out_; }
  std::size_t cols() const { return std::size_t{1} << in_; }

  const Cyclotomic& at(std::size_t r, std::size_t c) const { return data_[r * cols() + c]; }
  Cyclotomic& at(std::size_t r, std::size_t c) { return data_[r * cols() + c]; }
  const std::vector<Cyclotomic>& entries() const { return data_; }

  bool is_zero() const;
  bool is_dyadic() const;
  std::string shape_string() const;

  friend bool operator==(const RingMatrix& a, const RingMatrix& b) {
    return a.out_ == b.out_ && a.in_ == b.in_ && a.data_ == b.data_;
  }

 private:
  unsigned out_, in_;
  std::vector<Cyclotomic> data_;
};

/// f . g (apply g first).
RingMatrix compose(const RingMatrix& f, const RingMatrix& g);
/// Kronecker product, f on the most significant bits.
RingMatrix tensor(const RingMatrix& f, const RingMatrix& g);
RingMatrix add(const RingMatrix& a, const RingMatrix& b);
RingMatrix scalar_mul(const Cyclotomic& s, const RingMatrix& a);
RingMatrix transpose(const RingMatrix& a);
RingMatrix conj_entrywise(const RingMatrix& a);
bool equal(const RingMatrix& a, const RingMatrix& b);

/// (1/sqrt2) [[1,1],[1,-1]].
RingMatrix hadamard_matrix();
/// The n-fold tensor power of a 1 -> 1 matrix.
RingMatrix tensor_power(const RingMatrix& a, unsigned n);

/// Entrywise x -> psi_scalar(x); result has two more wires on each side.
RingMatrix psi_matrix(const RingMatrix& a);
/// Column (1, w, w^2, w^3).
RingMatrix theta_vector();
/// Left inverse of psi_matrix; throws std::domain_error when y is not in the image.
RingMatrix theta_recover(const RingMatrix& y, unsigned out_wires, unsigned in_wires);

nlohmann::json to_json(const Cyclotomic& x);
Cyclotomic cyclotomic_from_json(const nlohmann::json& j);
nlohmann::json to_json(const RingMatrix& m);
RingMatrix matrix_from_json(const nlohmann::json& j);

/// Rows of "a + b*w + ..." strings separated by " | ".
std::string to_text(const RingMatrix& m);

}  // namespace zxw
