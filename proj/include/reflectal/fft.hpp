// Thin RAII wrapper over FFTW complex transforms. Plan creation is serialized
// behind a global mutex (FFTW's planner is not thread-safe); execution on
// distinct arrays is safe concurrently.
#pragma once

#include <complex>
#include <cstddef>

namespace reflectal {

class Fft {
public:
    explicit Fft(std::size_t n);
    ~Fft();

    Fft(const Fft&) = delete;
    Fft& operator=(const Fft&) = delete;
    Fft(Fft&& other) noexcept;
    Fft& operator=(Fft&& other) noexcept;

    std::size_t size() const { return n_; }

    /// In-place unnormalized transforms (backward(forward(x)) = N x).
    void forward(std::complex<double>* data) const;
    void backward(std::complex<double>* data) const;

private:
    std::size_t n_ = 0;
    void* plan_fwd_ = nullptr;
    void* plan_bwd_ = nullptr;
};

}  // namespace reflectal
