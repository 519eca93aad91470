#pragma once

#include "oracles/oracles.hpp"
#include "vinberg/forms.hpp"
#include "vinberg/linalg.hpp"
#include "vinberg/roots.hpp"

#include <filesystem>
#include <initializer_list>
#include <optional>
#include <random>
#include <string>
#include <unistd.h>

namespace testing {

inline vinberg::IntVector iv(std::initializer_list<long> xs) {
    vinberg::IntVector v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

inline vinberg::RatVector rv(std::initializer_list<long> xs) {
    vinberg::RatVector v;
    for (long x : xs)
        v.emplace_back(x);
    return v;
}

inline vinberg::QuadraticForm diag(std::initializer_list<long> xs) { return vinberg::QuadraticForm::diagonal(iv(xs)); }

inline vinberg::QuadraticForm gram(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<vinberg::IntVector> r;
    for (auto row : rows)
        r.push_back(iv(row));
    return vinberg::QuadraticForm(r.size() - 1, vinberg::from_rows(r));
}

inline oracle::I64Matrix to_i64(const vinberg::QuadraticForm& f) {
    oracle::I64Matrix g(f.ambient(), oracle::I64Vector(f.ambient()));
    for (std::size_t i = 0; i < f.ambient(); ++i)
        for (std::size_t j = 0; j < f.ambient(); ++j)
            g[i][j] = f.gram()(i, j).get_si();
    return g;
}

inline oracle::I64Vector to_i64(const vinberg::IntVector& v) {
    oracle::I64Vector out;
    for (const auto& x : v)
        out.push_back(x.get_si());
    return out;
}

inline vinberg::IntVector from_i64(const oracle::I64Vector& v) {
    vinberg::IntVector out;
    for (auto x : v)
        out.emplace_back(static_cast<long>(x));
    return out;
}

inline std::vector<vinberg::IntVector> root_vectors(const std::vector<vinberg::Root>& roots) {
    std::vector<vinberg::IntVector> out;
    for (const auto& r : roots)
        out.push_back(r.e);
    return out;
}

// Random integral symmetric form of signature (n,1), entries in [-bound, bound],
// together with a primitive timelike control vector of small height.
struct RandomForm {
    vinberg::QuadraticForm form;
    vinberg::IntVector u0;
};

inline std::optional<vinberg::IntVector> small_timelike(const vinberg::QuadraticForm& f) {
    const std::size_t d = f.ambient();
    std::vector<long> x(d, -2);
    while (true) {
        vinberg::IntVector v;
        for (long c : x)
            v.emplace_back(c);
        if (f.norm(v) < 0 && vinberg::gcd_of(v) == 1)
            return v;
        std::size_t k = d;
        while (k > 0) {
            --k;
            if (x[k] < 2) {
                ++x[k];
                break;
            }
            x[k] = -2;
            if (k == 0)
                return std::nullopt;
        }
    }
}

inline RandomForm random_form(std::mt19937_64& rng, std::size_t n, long bound, bool diagonal_only = false) {
    std::uniform_int_distribution<long> entry(-bound, bound);
    while (true) {
        vinberg::IntMatrix g(n + 1, n + 1);
        for (std::size_t i = 0; i <= n; ++i)
            for (std::size_t j = i; j <= n; ++j) {
                if (diagonal_only && i != j)
                    continue;
                g(i, j) = entry(rng);
                g(j, i) = g(i, j);
            }
        if (vinberg::determinant(g) == 0)
            continue;
        vinberg::QuadraticForm f(n, g);
        if (!f.is_admissible())
            continue;
        if (auto u = small_timelike(f))
            return {f, *u};
    }
}

inline std::filesystem::path temp_dir(const std::string& name) {
    auto p = std::filesystem::temp_directory_path() / ("vinberg-test-" + name + "-" + std::to_string(::getpid()));
    std::filesystem::create_directories(p);
    return p;
}

} // namespace testing
