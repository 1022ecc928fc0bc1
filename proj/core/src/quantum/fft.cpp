#include "dmtrap/quantum/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <vector>

namespace dmtrap::quantum {

namespace {
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

Fft::Fft(std::size_t n) : n_(n) {
    std::lock_guard<std::mutex> lock(plan_mutex());
    std::vector<std::complex<double>> probe(n);
    auto* p = reinterpret_cast<fftw_complex*>(probe.data());
    plan_fwd_ = fftw_plan_dft_1d(static_cast<int>(n), p, p, FFTW_FORWARD,
                                 FFTW_MEASURE | FFTW_UNALIGNED);
    plan_bwd_ = fftw_plan_dft_1d(static_cast<int>(n), p, p, FFTW_BACKWARD,
                                 FFTW_MEASURE | FFTW_UNALIGNED);
}

Fft::~Fft() {
    std::lock_guard<std::mutex> lock(plan_mutex());
    fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
    fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
}

void Fft::forward(std::complex<double>* data) const {
    auto* p = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(static_cast<fftw_plan>(plan_fwd_), p, p);
}

void Fft::inverse(std::complex<double>* data) const {
    auto* p = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(static_cast<fftw_plan>(plan_bwd_), p, p);
    const double scale = 1.0 / static_cast<double>(n_);
    for (std::size_t i = 0; i < n_; ++i) data[i] *= scale;
}

std::shared_ptr<const Fft> shared_fft(std::size_t n) {
    static std::mutex cache_mutex;
    static std::vector<std::shared_ptr<const Fft>> cache;
    std::lock_guard<std::mutex> lock(cache_mutex);
    for (const auto& f : cache)
        if (f->size() == n) return f;
    cache.push_back(std::make_shared<const Fft>(n));
    return cache.back();
}

}  // namespace dmtrap::quantum
