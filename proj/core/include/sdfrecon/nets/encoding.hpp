#pragma once

#include "sdfrecon/math.hpp"

namespace sdfrecon {

// Frequency positional encoding. Output layout per input component block:
// [x (if raw kept); sin(2^0 pi x), cos(2^0 pi x); ...; sin(2^{L-1} pi x), cos(2^{L-1} pi x)]
// where each sin/cos entry is a full block over the input components.
struct EncodingConfig {
  int num_frequencies = 0;
  bool include_raw_input = true;

  int output_dim(int input_dim) const {
    return input_dim * (2 * num_frequencies + (include_raw_input ? 1 : 0));
  }
};

VectorXd positional_encode(const VectorXd& x, const EncodingConfig& cfg);

// Columns are independent inputs.
MatrixXd positional_encode_batch(const MatrixXd& x, const EncodingConfig& cfg);

// For input gradients through the encoding of 3D points.
// encoding_jacobian_tmul: given Q = dL/d(encoded) per column, returns J^T Q (input_dim x N).
// encoding_jacobian_mul: given G = dL/d(J^T q) per column, returns J G (enc_dim x N).
// Both reuse the already-encoded matrix E to avoid recomputing sin/cos.
MatrixXd encoding_jacobian_tmul(const MatrixXd& x, const MatrixXd& encoded,
                                const MatrixXd& q, const EncodingConfig& cfg);
MatrixXd encoding_jacobian_mul(const MatrixXd& x, const MatrixXd& encoded,
                               const MatrixXd& g, const EncodingConfig& cfg);

}  // namespace sdfrecon
