#include "zxw/linalg.hpp"

#include <sstream>

namespace zxw {

using nlohmann::json;

RingMatrix::RingMatrix(unsigned out_wires, unsigned in_wires)
    : out_(out_wires), in_(in_wires) {
  if (out_wires + in_wires > 24) throw DimensionError("matrix too large: " + shape_string());
  data_.assign(rows() * cols(), Cyclotomic{});
}

RingMatrix RingMatrix::identity(unsigned wires) {
  RingMatrix m(wires, wires);
  for (std::size_t i = 0; i < m.rows(); ++i) m.at(i, i) = 1;
  return m;
}

RingMatrix RingMatrix::scalar(const Cyclotomic& s) {
  RingMatrix m(0, 0);
  m.at(0, 0) = s;
  return m;
}

RingMatrix RingMatrix::from_rows(unsigned out_wires, unsigned in_wires,
                                 const std::vector<std::vector<Cyclotomic>>& rows) {
  RingMatrix m(out_wires, in_wires);
  if (rows.size() != m.rows()) throw DimensionError("wrong row count for " + m.shape_string());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols()) throw DimensionError("wrong column count for " + m.shape_string());
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

bool RingMatrix::is_zero() const {
  for (const auto& x : data_)
    if (!x.is_zero()) return false;
  return true;
}

bool RingMatrix::is_dyadic() const {
  for (const auto& x : data_)
    if (!x.is_dyadic()) return false;
  return true;
}

std::string RingMatrix::shape_string() const {
  return std::to_string(in_) + "->" + std::to_string(out_);
}

RingMatrix compose(const RingMatrix& f, const RingMatrix& g) {
  if (g.out_wires() != f.in_wires())
    throw DimensionError("cannot compose " + f.shape_string() + " after " + g.shape_string());
  RingMatrix r(f.out_wires(), g.in_wires());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t k = 0; k < f.cols(); ++k) {
      const Cyclotomic& a = f.at(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < g.cols(); ++j) {
        const Cyclotomic& b = g.at(k, j);
        if (!b.is_zero()) r.at(i, j) += a * b;
      }
    }
  return r;
}

RingMatrix tensor(const RingMatrix& f, const RingMatrix& g) {
  RingMatrix r(f.out_wires() + g.out_wires(), f.in_wires() + g.in_wires());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) {
      const Cyclotomic& a = f.at(i, j);
      if (a.is_zero()) continue;
      for (std::size_t k = 0; k < g.rows(); ++k)
        for (std::size_t l = 0; l < g.cols(); ++l) {
          const Cyclotomic& b = g.at(k, l);
          if (!b.is_zero()) r.at(i * g.rows() + k, j * g.cols() + l) = a * b;
        }
    }
  return r;
}

RingMatrix add(const RingMatrix& a, const RingMatrix& b) {
  if (a.out_wires() != b.out_wires() || a.in_wires() != b.in_wires())
    throw DimensionError("cannot add " + a.shape_string() + " and " + b.shape_string());
  RingMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) += b.at(i, j);
  return r;
}

RingMatrix scalar_mul(const Cyclotomic& s, const RingMatrix& a) {
  RingMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = s * a.at(i, j);
  return r;
}

RingMatrix transpose(const RingMatrix& a) {
  RingMatrix r(a.in_wires(), a.out_wires());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(j, i) = a.at(i, j);
  return r;
}

RingMatrix conj_entrywise(const RingMatrix& a) {
  RingMatrix r = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r.at(i, j) = a.at(i, j).conj();
  return r;
}

bool equal(const RingMatrix& a, const RingMatrix& b) {
  if (a.out_wires() != b.out_wires() || a.in_wires() != b.in_wires())
    throw DimensionError("cannot compare " + a.shape_string() + " and " + b.shape_string());
  return a == b;
}

RingMatrix hadamard_matrix() {
  Cyclotomic s = Cyclotomic::inv_sqrt2();
  return RingMatrix::from_rows(1, 1, {{s, s}, {s, -s}});
}

RingMatrix tensor_power(const RingMatrix& a, unsigned n) {
  RingMatrix r = RingMatrix::scalar(1);
  for (unsigned i = 0; i < n; ++i) r = tensor(r, a);
  return r;
}

RingMatrix psi_matrix(const RingMatrix& a) {
  RingMatrix r(a.out_wires() + 2, a.in_wires() + 2);
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (a.at(i, j).is_zero()) continue;
      Dyadic4x4 b = psi_scalar(a.at(i, j));
      for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q) r.at(4 * i + p, 4 * j + q) = Cyclotomic(b[p][q]);
    }
  return r;
}

RingMatrix theta_vector() {
  return RingMatrix::from_rows(2, 0, {{1}, {Cyclotomic::root_power(1)},
                                      {Cyclotomic::root_power(2)}, {Cyclotomic::root_power(3)}});
}

RingMatrix theta_recover(const RingMatrix& y, unsigned out_wires, unsigned in_wires) {
  if (y.out_wires() != out_wires + 2 || y.in_wires() != in_wires + 2)
    throw DimensionError("theta_recover: " + y.shape_string() + " is not the image of a " +
                         std::to_string(in_wires) + "->" + std::to_string(out_wires) + " matrix");
  RingMatrix x(out_wires, in_wires);
  for (std::size_t i = 0; i < x.rows(); ++i)
    for (std::size_t j = 0; j < x.cols(); ++j) {
      // Row 0 of a I + b M + c M^2 + d M^3 reads (a, b, c, d).
      std::array<Dyadic, 4> co;
      for (int q = 0; q < 4; ++q) {
        const Cyclotomic& e = y.at(4 * i, 4 * j + q);
        if (!e.is_dyadic()) throw std::domain_error("theta_recover: non-dyadic entry");
        co[q] = e.a();
      }
      Cyclotomic v(co[0], co[1], co[2], co[3]);
      Dyadic4x4 b = psi_scalar(v);
      for (int p = 0; p < 4; ++p)
        for (int q = 0; q < 4; ++q)
          if (!(y.at(4 * i + p, 4 * j + q) == Cyclotomic(b[p][q])))
            throw std::domain_error("theta_recover: block (" + std::to_string(i) + "," +
                                    std::to_string(j) + ") is not in the image of psi");
      x.at(i, j) = v;
    }
  return x;
}

json to_json(const Cyclotomic& x) {
  json arr = json::array();
  for (int i = 0; i < 4; ++i) {
    Dyadic c = x.coeff(i);
    json num = c.num().str().size() <= 18 ? json(static_cast<long long>(c.num())) : json(c.num().str());
    arr.push_back(json::array({num, c.exp()}));
  }
  return arr;
}

Cyclotomic cyclotomic_from_json(const json& j) {
  if (!j.is_array() || j.size() != 4) throw std::invalid_argument("cyclotomic must be four [num, exp] pairs");
  std::array<Dyadic, 4> co;
  for (int i = 0; i < 4; ++i) {
    const json& p = j[i];
    if (!p.is_array() || p.size() != 2) throw std::invalid_argument("dyadic must be [num, exp]");
    BigInt num = p[0].is_string() ? BigInt(p[0].get<std::string>()) : BigInt(p[0].get<long long>());
    long long e = p[1].get<long long>();
    if (e < 0) throw std::invalid_argument("negative dyadic exponent");
    co[i] = Dyadic(num, static_cast<unsigned>(e));
  }
  return Cyclotomic(co[0], co[1], co[2], co[3]);
}

json to_json(const RingMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m.at(i, j)));
    rows.push_back(row);
  }
  return {{"out", m.out_wires()}, {"in", m.in_wires()}, {"entries", rows}};
}

RingMatrix matrix_from_json(const json& j) {
  if (!j.is_object() || !j.contains("out") || !j.contains("in") || !j.contains("entries"))
    throw std::invalid_argument("matrix JSON needs out, in, entries");
  int out = j["out"].get<int>(), in = j["in"].get<int>();
  if (out < 0 || in < 0 || out + in > 24) throw std::invalid_argument("bad matrix shape");
  std::vector<std::vector<Cyclotomic>> rows;
  for (const auto& row : j["entries"]) {
    if (!row.is_array()) throw std::invalid_argument("matrix rows must be arrays");
    std::vector<Cyclotomic> r;
    for (const auto& e : row) r.push_back(cyclotomic_from_json(e));
    rows.push_back(std::move(r));
  }
  try {
    return RingMatrix::from_rows(out, in, rows);
  } catch (const DimensionError& e) {
    throw std::invalid_argument(e.what());
  }
}

std::string to_text(const RingMatrix& m) {
  std::ostringstream os;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) os << " | ";
      os << m.at(i, j);
    }
    os << '\n';
  }
  return os.str();
}

}  // namespace zxw
