#include "sdfrecon/nets/encoding.hpp"

#include <cmath>
#include <stdexcept>

namespace sdfrecon {

// sin/cos at frequency 2^k pi via double-angle recurrence from the k=0 pair.
// One sincos per component instead of 2L transcendentals; the recurrence
// error stays below ~1e-12 for L <= 16 in double precision.

MatrixXd positional_encode_batch(const MatrixXd& x, const EncodingConfig& cfg) {
  if (!x.allFinite()) throw std::invalid_argument("positional_encode: non-finite input");
  const Eigen::Index d = x.rows(), n = x.cols();
  const int raw = cfg.include_raw_input ? 1 : 0;
  MatrixXd out(d * (2 * cfg.num_frequencies + raw), n);
  if (raw) out.topRows(d) = x;
  if (cfg.num_frequencies == 0) return out;

  Eigen::ArrayXXd s = (M_PI * x).array().sin();
  Eigen::ArrayXXd c = (M_PI * x).array().cos();
  for (int k = 0; k < cfg.num_frequencies; ++k) {
    out.middleRows(d * (raw + 2 * k), d) = s;
    out.middleRows(d * (raw + 2 * k + 1), d) = c;
    if (k + 1 < cfg.num_frequencies) {
      const Eigen::ArrayXXd s2 = 2.0 * s * c;
      c = c * c - s * s;
      s = s2;
    }
  }
  return out;
}

VectorXd positional_encode(const VectorXd& x, const EncodingConfig& cfg) {
  return positional_encode_batch(x, cfg).col(0);
}

MatrixXd encoding_jacobian_tmul(const MatrixXd& x, const MatrixXd& encoded,
                                const MatrixXd& q, const EncodingConfig& cfg) {
  const Eigen::Index d = x.rows(), n = x.cols();
  const int raw = cfg.include_raw_input ? 1 : 0;
  MatrixXd out = MatrixXd::Zero(d, n);
  if (raw) out = q.topRows(d);
  double omega = M_PI;
  for (int k = 0; k < cfg.num_frequencies; ++k, omega *= 2.0) {
    const auto sin_rows = encoded.middleRows(d * (raw + 2 * k), d).array();
    const auto cos_rows = encoded.middleRows(d * (raw + 2 * k + 1), d).array();
    out.array() += omega * (cos_rows * q.middleRows(d * (raw + 2 * k), d).array() -
                            sin_rows * q.middleRows(d * (raw + 2 * k + 1), d).array());
  }
  return out;
}

MatrixXd encoding_jacobian_mul(const MatrixXd& x, const MatrixXd& encoded,
                               const MatrixXd& g, const EncodingConfig& cfg) {
  const Eigen::Index d = x.rows(), n = x.cols();
  const int raw = cfg.include_raw_input ? 1 : 0;
  MatrixXd out = MatrixXd::Zero(encoded.rows(), n);
  if (raw) out.topRows(d) = g;
  double omega = M_PI;
  for (int k = 0; k < cfg.num_frequencies; ++k, omega *= 2.0) {
    const auto sin_rows = encoded.middleRows(d * (raw + 2 * k), d).array();
    const auto cos_rows = encoded.middleRows(d * (raw + 2 * k + 1), d).array();
    out.middleRows(d * (raw + 2 * k), d).array() = omega * cos_rows * g.array();
    out.middleRows(d * (raw + 2 * k + 1), d).array() = -omega * sin_rows * g.array();
  }
  return out;
}

}  // namespace sdfrecon
