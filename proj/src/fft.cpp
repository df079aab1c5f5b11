#include "reflectal/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <vector>

namespace reflectal {

namespace {
std::mutex& planner_mutex() {
    static std::mutex m;
    return m;
}
}  // namespace

Fft::Fft(std::size_t n) : n_(n) {
    std::lock_guard<std::mutex> lock(planner_mutex());
    std::vector<std::complex<double>> scratch(n);
    auto* ptr = reinterpret_cast<fftw_complex*>(scratch.data());
    // FFTW_ESTIMATE keeps planning deterministic; FFTW_UNALIGNED lets the
    // plans run on any caller buffer via fftw_execute_dft.
    plan_fwd_ = fftw_plan_dft_1d(static_cast<int>(n), ptr, ptr, FFTW_FORWARD,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
    plan_bwd_ = fftw_plan_dft_1d(static_cast<int>(n), ptr, ptr, FFTW_BACKWARD,
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
}

Fft::~Fft() {
    if (plan_fwd_ || plan_bwd_) {
        std::lock_guard<std::mutex> lock(planner_mutex());
        if (plan_fwd_) fftw_destroy_plan(static_cast<fftw_plan>(plan_fwd_));
        if (plan_bwd_) fftw_destroy_plan(static_cast<fftw_plan>(plan_bwd_));
    }
}

Fft::Fft(Fft&& other) noexcept
    : n_(other.n_), plan_fwd_(other.plan_fwd_), plan_bwd_(other.plan_bwd_) {
    other.plan_fwd_ = nullptr;
    other.plan_bwd_ = nullptr;
}

Fft& Fft::operator=(Fft&& other) noexcept {
    if (this != &other) {
        this->~Fft();
        n_ = other.n_;
        plan_fwd_ = other.plan_fwd_;
        plan_bwd_ = other.plan_bwd_;
        other.plan_fwd_ = nullptr;
        other.plan_bwd_ = nullptr;
    }
    return *this;
}

void Fft::forward(std::complex<double>* data) const {
    auto* ptr = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(static_cast<fftw_plan>(plan_fwd_), ptr, ptr);
}

void Fft::backward(std::complex<double>* data) const {
    auto* ptr = reinterpret_cast<fftw_complex*>(data);
    fftw_execute_dft(static_cast<fftw_plan>(plan_bwd_), ptr, ptr);
}

}  // namespace reflectal
