#ifndef SERNET_TENSOR_HPP
#define SERNET_TENSOR_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "sernet/errors.hpp"

namespace sernet {

namespace autograd {
struct Node;
}

// NCHW shape. Every tensor in the project is 4-d; vectors and scalars use
// size-1 axes.
struct Shape {
    std::int64_t n = 1;
    std::int64_t c = 1;
    std::int64_t h = 1;
    std::int64_t w = 1;

    std::int64_t numel() const { return n * c * h * w; }
    bool operator==(const Shape& o) const = default;
    std::string str() const;
};

// Scalar shape used by losses and reductions.
inline Shape scalar_shape() { return Shape{1, 1, 1, 1}; }

struct TensorImpl {
    Shape shape;
    std::vector<double> data;
    std::vector<double> grad; // empty until first accumulation
    bool requires_grad = false;
    std::shared_ptr<autograd::Node> grad_fn; // null for leaves
};

// Value-semantics handle onto a shared buffer. Copying a Tensor aliases the
// storage; use clone() for a deep copy.
class Tensor {
public:
    Tensor() = default;

    static Tensor zeros(const Shape& s, bool requires_grad = false);
    static Tensor full(const Shape& s, double value, bool requires_grad = false);
    static Tensor from_vector(const Shape& s, std::vector<double> values,
                              bool requires_grad = false);

    bool defined() const { return impl != nullptr; }
    const Shape& shape() const { return impl->shape; }
    std::int64_t numel() const { return impl->shape.numel(); }

    double* data() { return impl->data.data(); }
    const double* data() const { return impl->data.data(); }
    std::vector<double>& vec() { return impl->data; }
    const std::vector<double>& vec() const { return impl->data; }

    double at(std::int64_t n, std::int64_t c, std::int64_t h, std::int64_t w) const;
    double& at(std::int64_t n, std::int64_t c, std::int64_t h, std::int64_t w);

    bool requires_grad() const { return impl->requires_grad; }
    void set_requires_grad(bool v) { impl->requires_grad = v; }

    bool has_grad() const { return impl && !impl->grad.empty(); }
    const std::vector<double>& grad() const;
    void zero_grad();

    // Value of a scalar tensor.
    double item() const;

    // Deep copy of the data; the copy is a leaf with no graph history.
    Tensor clone() const;

    // Reverse-mode differentiation from a scalar. Fills the grad slot of
    // every reachable tensor that requires one. Each recorded graph may be
    // walked once; a second call is a usage error.
    void backward() const;

    std::shared_ptr<TensorImpl> impl;
};

// True if all elements are finite.
bool all_finite(const Tensor& t);

} // namespace sernet

#endif
