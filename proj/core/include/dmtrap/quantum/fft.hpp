#pragma once

#include <complex>
#include <cstddef>
#include <memory>

namespace dmtrap::quantum {

/// In-place complex FFT pair for one transform size.  Plans are created
/// under a global lock (FFTW planning is not thread-safe); execution is
/// safe from any thread on distinct buffers.  inverse() includes the 1/n
/// normalization so forward followed by inverse is the identity.
class Fft {
  public:
    explicit Fft(std::size_t n);
    ~Fft();

    Fft(const Fft&) = delete;
    Fft& operator=(const Fft&) = delete;

    void forward(std::complex<double>* data) const;
    void inverse(std::complex<double>* data) const;

    std::size_t size() const { return n_; }

  private:
    std::size_t n_;
    void* plan_fwd_;
    void* plan_bwd_;
};

/// Process-wide cached transform per size; planning happens once.
/// Executing the shared plan from several threads on distinct buffers is
/// safe.
std::shared_ptr<const Fft> shared_fft(std::size_t n);

}  // namespace dmtrap::quantum
