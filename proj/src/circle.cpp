#include "gagliardo/circle.hpp"

#include <unsupported/Eigen/FFT>

namespace gagliardo {

namespace {

// Inverse DFT of a mode map: out_j = sum_k spectrum[k mod M] w^{jk}.
CVector inverse_fft(CVector spectrum) {
  Eigen::FFT<double> fft;
  CVector out(spectrum.size());
  fft.inv(out, spectrum);
  return out.array() * static_cast<double>(spectrum.size());
}

CVector forward_fft(const CVector& values) {
  Eigen::FFT<double> fft;
  CVector out(values.size());
  CVector in = values;
  fft.fwd(out, in);
  return out;
}

}  // namespace

CVector synthesize_values(const FourierCoeffs& coeffs, int m_nodes, double phase) {
  const int K = coeffs.bandwidth();
  if (m_nodes < 2 * K + 2)
    throw std::invalid_argument("synthesize: grid too small for bandwidth (aliasing)");
  // v_j = sum_k c_k e^{ik(-pi + phase)} w^{jk}, w = e^{2 pi i / M}.
  CVector spectrum = CVector::Zero(m_nodes);
  for (int k = -K; k <= K; ++k) {
    const double ang = k * (phase - kPi);
    const int slot = ((k % m_nodes) + m_nodes) % m_nodes;
    spectrum[slot] += coeffs.coeff(k) * Complex(std::cos(ang), std::sin(ang));
  }
  return inverse_fft(std::move(spectrum));
}

GridFunction synthesize(const FourierCoeffs& coeffs, int n_samples) {
  return GridFunction(synthesize_values(coeffs, n_samples, 0.0));
}

FourierCoeffs analyze(const GridFunction& grid, int bandwidth) {
  const int n = grid.size();
  if (2 * bandwidth + 1 > n)
    throw std::invalid_argument("analyze: bandwidth too large for grid size");
  const CVector spec = forward_fft(grid.values());
  CVector out(2 * bandwidth + 1);
  for (int k = -bandwidth; k <= bandwidth; ++k) {
    const int slot = ((k % n) + n) % n;
    // Undo the grid start at -pi: c_k = e^{ik pi} * (1/N) sum_j v_j w^{-jk}.
    const double ang = k * kPi;
    out[k + bandwidth] = spec[slot] / static_cast<double>(n) * Complex(std::cos(ang), std::sin(ang));
  }
  return FourierCoeffs(std::move(out));
}

Complex circle_mean(const GridFunction& grid) {
  return grid.values().mean();
}

Complex eval_at_angle(const FourierCoeffs& coeffs, double theta) {
  const int K = coeffs.bandwidth();
  const Complex z(std::cos(theta), std::sin(theta));
  // Horner in z over k = -K..K: sum_k c_k z^k = z^{-K} * sum_m c_{m-K} z^m.
  Complex acc = 0.0;
  for (int k = K; k >= -K; --k) acc = acc * z + coeffs.coeff(k);
  const Complex zmK(std::cos(K * theta), -std::sin(K * theta));
  return acc * zmK;
}

}  // namespace gagliardo
