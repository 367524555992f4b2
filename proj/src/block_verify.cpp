// Copyright 2026 The pbe developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pbe/block_verify.hpp"

#include <nlohmann/json.hpp>

namespace pbe {

Eigen::MatrixXcd extract_block(const BlockEncoding& be) {
  be.check();
  const std::int64_t N = std::int64_t{1} << be.n_work;
  const std::int64_t offset = be.flag << be.n_work;
  Eigen::MatrixXcd block(N, N);
  for (std::int64_t k = 0; k < N; ++k) {
    StateVector s = run_on_basis(be.circuit, offset + k);
    block.col(k) = s.amps.segment(offset, N);
  }
  return be.alpha * block;
}

double success_probability(const BlockEncoding& be,
                           const Eigen::VectorXcd& work_state) {
  be.check();
  const std::int64_t N = std::int64_t{1} << be.n_work;
  if (work_state.size() != N)
    throw std::invalid_argument("success_probability: wrong state length");
  if (std::abs(work_state.norm() - 1.0) > 1e-9)
    throw std::invalid_argument("success_probability: state not normalised");
  const std::int64_t offset = be.flag << be.n_work;
  StateVector s(be.total_qubits());
  s.amps.segment(offset, N) = work_state;
  apply_circuit(s, be.circuit);
  return s.amps.segment(offset, N).squaredNorm();
}

VerificationReport verify_block(const BlockEncoding& be,
                                const Eigen::MatrixXcd& target,
                                double tol) {
  const Eigen::MatrixXcd block = extract_block(be);
  if (block.rows() != target.rows() || block.cols() != target.cols())
    throw std::invalid_argument("verify_block: dimension mismatch");

  VerificationReport report;
  report.max_abs_error = (block - target).cwiseAbs().maxCoeff();
  report.target_norm = target.jacobiSvd().singularValues()(0);
  report.alpha = be.alpha;
  const std::int64_t N = std::int64_t{1} << be.n_work;
  const Eigen::VectorXcd uniform =
      Eigen::VectorXcd::Constant(N, 1.0 / std::sqrt(static_cast<double>(N)));
  report.success_probability = success_probability(be, uniform);
  report.passed = report.max_abs_error <= tol;
  return report;
}

std::string VerificationReport::to_json_string() const {
  nlohmann::json j;
  j["max_abs_error"] = max_abs_error;
  j["target_norm"] = target_norm;
  j["alpha"] = alpha;
  j["success_probability"] = success_probability;
  j["passed"] = passed;
  return j.dump(2);
}

}  // namespace pbe
