#ifndef MOOLAB_PROBLEMS_ZDT_HPP
#define MOOLAB_PROBLEMS_ZDT_HPP

#include "moolab/core/problem.hpp"

namespace moo {

// Zitzler-Deb-Thiele bi-objective benchmark family. All variants share the
// structure f1 = f1(x_head), f2 = g(x_tail) * h(f1, g).

class ZDT1 final : public Problem {
public:
    explicit ZDT1(int n_vars = 30);
    void evaluate(FloatSolution& s) const override;
};

class ZDT2 final : public Problem {
public:
    explicit ZDT2(int n_vars = 30);
    void evaluate(FloatSolution& s) const override;
};

class ZDT3 final : public Problem {
public:
    explicit ZDT3(int n_vars = 30);
    void evaluate(FloatSolution& s) const override;
};

/// Multimodal variant: x1 in [0,1], the rest in [-5,5].
class ZDT4 final : public Problem {
public:
    explicit ZDT4(int n_vars = 10);
    void evaluate(FloatSolution& s) const override;
};

/// Non-uniform density variant with f1 = 1 - exp(-4 x1) sin^6(6 pi x1).
class ZDT6 final : public Problem {
public:
    explicit ZDT6(int n_vars = 10);
    void evaluate(FloatSolution& s) const override;
};

} // namespace moo

#endif
