#include "vinberg/forms.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <sstream>

namespace vinberg {

std::string to_string(const Signature& s) {
    return "(" + std::to_string(s.positive) + "," + std::to_string(s.negative) + ")";
}

Signature signature_of(const IntMatrix& gram) {
    if (gram.rows() != gram.cols())
        throw Error("shape", "Gram matrix must be square");
    RatMatrix a = to_rational(gram);
    std::vector<std::size_t> live(gram.rows());
    for (std::size_t i = 0; i < live.size(); ++i)
        live[i] = i;

    Signature sig;
    while (!live.empty()) {
        auto diag = std::find_if(live.begin(), live.end(), [&](std::size_t i) { return a(i, i) != 0; });
        if (diag != live.end()) {
            const std::size_t p = *diag;
            const Rational piv = a(p, p);
            (piv > 0 ? sig.positive : sig.negative) += 1;
            live.erase(diag);
            for (auto x : live)
                for (auto y : live)
                    a(x, y) -= a(x, p) * a(p, y) / piv;
            continue;
        }
        // All remaining diagonal entries vanish: eliminate a hyperbolic plane.
        std::size_t j = 0, k = 0;
        bool found = false;
        for (std::size_t s = 0; s < live.size() && !found; ++s)
            for (std::size_t t = s + 1; t < live.size() && !found; ++t)
                if (a(live[s], live[t]) != 0) {
                    j = live[s];
                    k = live[t];
                    found = true;
                }
        if (!found)
            throw Error("degenerate", "Gram matrix is singular");
        const Rational b = a(j, k);
        sig.positive += 1;
        sig.negative += 1;
        live.erase(std::remove_if(live.begin(), live.end(), [&](std::size_t i) { return i == j || i == k; }),
                   live.end());
        for (auto x : live)
            for (auto y : live)
                a(x, y) -= (a(x, j) * a(k, y) + a(x, k) * a(j, y)) / b;
    }
    return sig;
}

QuadraticForm::QuadraticForm(std::size_t dim, IntMatrix gram) : dim_(dim), gram_(std::move(gram)) {
    if (dim_ < 1)
        throw Error("shape", "hyperbolic dimension must be at least 1");
    if (gram_.rows() != dim_ + 1 || gram_.cols() != dim_ + 1)
        throw Error("shape", "Gram matrix must be " + std::to_string(dim_ + 1) + "x" + std::to_string(dim_ + 1));
    diagonal_ = true;
    for (std::size_t i = 0; i < gram_.rows(); ++i)
        for (std::size_t j = 0; j < gram_.cols(); ++j) {
            if (gram_(i, j) != gram_(j, i))
                throw Error("shape", "Gram matrix is not symmetric");
            if (i != j && gram_(i, j) != 0)
                diagonal_ = false;
        }
    signature_ = signature_of(gram_);
}

QuadraticForm QuadraticForm::diagonal(const IntVector& entries) {
    if (entries.size() < 2)
        throw Error("shape", "a diagonal form needs at least two entries");
    IntMatrix g(entries.size(), entries.size());
    for (std::size_t i = 0; i < entries.size(); ++i)
        g(i, i) = entries[i];
    return QuadraticForm(entries.size() - 1, std::move(g));
}

bool QuadraticForm::is_admissible() const noexcept {
    return signature_ == Signature{dim_, 1};
}

void QuadraticForm::check_length(const LorentzVector& v) const {
    if (v.size() != ambient())
        throw Error("shape", "vector of length " + std::to_string(v.size()) + " in a form of rank " +
                                 std::to_string(ambient()));
}

Integer QuadraticForm::inner(const LorentzVector& u, const LorentzVector& v) const {
    check_length(u);
    check_length(v);
    Integer s = 0;
    if (diagonal_) {
        for (std::size_t i = 0; i < u.size(); ++i)
            s += gram_(i, i) * u[i] * v[i];
        return s;
    }
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (u[i] == 0)
            continue;
        s += u[i] * dot(gram_.row(i), v);
    }
    return s;
}

IntVector QuadraticForm::covector(const LorentzVector& u) const {
    check_length(u);
    return multiply(gram_, u);
}

RatVector QuadraticForm::reflect(const LorentzVector& e, const LorentzVector& x) const {
    const Integer s = norm(e);
    if (s <= 0)
        throw Error("not a root direction", "reflection needs (e,e) > 0");
    const Rational c = make_rational(2 * inner(e, x), s);
    RatVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        out[i] = x[i] - c * e[i];
    return out;
}

RatMatrix QuadraticForm::reflection_matrix(const LorentzVector& e) const {
    const Integer s = norm(e);
    if (s <= 0)
        throw Error("not a root direction", "reflection needs (e,e) > 0");
    const IntVector ge = covector(e);
    RatMatrix r = RatMatrix::identity(ambient());
    for (std::size_t i = 0; i < ambient(); ++i)
        for (std::size_t j = 0; j < ambient(); ++j)
            r(i, j) -= make_rational(2 * e[i] * ge[j], s);
    return r;
}

std::string QuadraticForm::digest() const {
    std::ostringstream os;
    os << dim_ << ':';
    for (std::size_t i = 0; i < gram_.rows(); ++i)
        for (std::size_t j = 0; j < gram_.cols(); ++j)
            os << gram_(i, j).get_str() << ',';
    return fnv1a_hex(os.str());
}

ControlVector::ControlVector(const QuadraticForm& form, LorentzVector u0) : u0_(std::move(u0)) {
    if (u0_.size() != form.ambient())
        throw Error("shape", "control vector has length " + std::to_string(u0_.size()) + ", expected " +
                                 std::to_string(form.ambient()));
    if (gcd_of(u0_) != 1)
        throw Error("control", "control vector must be primitive");
    q_ = form.norm(u0_);
    if (q_ >= 0)
        throw Error("control", "control vector is not timelike: (u0,u0) = " + q_.get_str());
}

LorentzVector default_control(const QuadraticForm& form) {
    if (!form.is_diagonal())
        throw Error("control", "non-diagonal form: a control vector must be given explicitly");
    LorentzVector u0(form.ambient());
    for (std::size_t i = 0; i < form.ambient(); ++i)
        if (form.gram()(i, i) < 0) {
            u0[i] = 1;
            return u0;
        }
    throw Error("control", "diagonal form has no negative entry");
}

Integer integer_from_json(const nlohmann::json& j) {
    if (j.is_number_integer())
        return Integer(std::to_string(j.get<std::int64_t>()));
    if (j.is_number_unsigned())
        return Integer(std::to_string(j.get<std::uint64_t>()));
    if (j.is_string()) {
        Integer x;
        if (x.set_str(j.get<std::string>(), 10) != 0)
            throw Error("parse", "not an integer: '" + j.get<std::string>() + "'");
        return x;
    }
    throw Error("parse", "expected an integer, got " + j.dump());
}

QuadraticForm form_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("dim"))
        throw Error("parse", "form must be an object with a \"dim\" field");
    const Integer dim_big = integer_from_json(j.at("dim"));
    if (dim_big < 1 || dim_big > 64)
        throw Error("shape", "unsupported dimension " + dim_big.get_str());
    const std::size_t dim = dim_big.get_ui();
    if (j.contains("diag")) {
        IntVector d;
        for (const auto& x : j.at("diag"))
            d.push_back(integer_from_json(x));
        if (d.size() != dim + 1)
            throw Error("shape", "\"diag\" must have dim+1 entries");
        return QuadraticForm::diagonal(d);
    }
    if (!j.contains("gram"))
        throw Error("parse", "form needs \"gram\" or \"diag\"");
    std::vector<IntVector> rows;
    for (const auto& r : j.at("gram")) {
        IntVector row;
        for (const auto& x : r)
            row.push_back(integer_from_json(x));
        rows.push_back(std::move(row));
    }
    if (rows.size() != dim + 1)
        throw Error("shape", "\"gram\" must have dim+1 rows");
    return QuadraticForm(dim, from_rows(rows));
}

nlohmann::json form_to_json(const QuadraticForm& form) {
    nlohmann::json gram = nlohmann::json::array();
    for (std::size_t i = 0; i < form.ambient(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t j = 0; j < form.ambient(); ++j)
            row.push_back(form.gram()(i, j).get_str());
        gram.push_back(std::move(row));
    }
    return {{"dim", form.dim()}, {"gram", std::move(gram)}};
}

std::string fnv1a_hex(const std::string& text) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : text) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

} // namespace vinberg
