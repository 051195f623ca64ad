#pragma once

#include "nat.hpp"

#include <functional>
#include <memory>
#include <string>
#include <vector>

namespace dhopf {

struct CochainFlags {
    bool multiplicative = false;
    bool completely_multiplicative = false;
};

// A map from naturals to rationals: an evaluator plus an optional table of
// precomputed values on [offset, offset + table.size()).
class Cochain {
public:
    using Eval = std::function<Rational(const Nat &)>;

    using Flags = CochainFlags;

    Cochain() : Cochain("zero", [](const Nat &) { return Rational(0); }) {}

    Cochain(std::string name, Eval eval, Flags flags = {})
        : name_(std::move(name)), eval_(std::move(eval)), flags_(flags) {}

    static Cochain from_table(std::string name, std::vector<Rational> values, std::uint64_t offset,
                              Flags flags = {}) {
        auto table = std::make_shared<const std::vector<Rational>>(std::move(values));
        Cochain c(std::move(name),
                  [table, offset, n = name](const Nat &k) -> Rational {
                      if (k < Nat(offset) || !(k < Nat(offset + table->size())))
                          throw domain_error("cochain '" + n + "' is not defined at " + k.str());
                      return (*table)[k.to_u64() - offset];
                  },
                  flags);
        c.table_ = table;
        c.offset_ = offset;
        return c;
    }

    Rational operator()(const Nat &n) const {
        if (table_ && n.fits_u64()) {
            const auto k = n.to_u64();
            if (k >= offset_ && k - offset_ < table_->size()) return (*table_)[k - offset_];
        }
        return eval_(n);
    }

    Rational at(std::uint64_t n) const {
        if (table_ && n >= offset_ && n - offset_ < table_->size()) return (*table_)[n - offset_];
        return eval_(Nat(n));
    }

    // Same map with values on [lo, hi] precomputed.
    Cochain tabulate(std::uint64_t lo, std::uint64_t hi) const {
        std::vector<Rational> v;
        v.reserve(hi >= lo ? hi - lo + 1 : 0);
        for (std::uint64_t n = lo; n <= hi; ++n) v.push_back(at(n));
        Cochain c = *this;
        c.table_ = std::make_shared<const std::vector<Rational>>(std::move(v));
        c.offset_ = lo;
        return c;
    }

    const std::string &name() const { return name_; }
    const Flags &flags() const { return flags_; }

private:
    std::string name_;
    Eval eval_;
    Flags flags_;
    std::shared_ptr<const std::vector<Rational>> table_;
    std::uint64_t offset_ = 0;
};

namespace cochains {

inline Cochain constant(const Rational &c) {
    return Cochain("const", [c](const Nat &) { return c; });
}

inline Cochain zeta() {
    return Cochain("zeta", [](const Nat &) { return Rational(1); }, {true, true});
}

inline Cochain identity() {
    return Cochain("identity", [](const Nat &n) { return Rational(n.value()); }, {true, true});
}

inline Cochain power(unsigned k) {
    return Cochain("power" + std::to_string(k),
                   [k](const Nat &n) { return Rational(ipow(n.value(), k)); }, {true, true});
}

inline Cochain unit_add() {
    return Cochain("unit_add", [](const Nat &n) { return Rational(n.is_zero() ? 1 : 0); });
}

inline Cochain unit_mul() {
    return Cochain("unit_mul", [](const Nat &n) { return Rational(n == Nat(1) ? 1 : 0); }, {true, true});
}

inline Cochain moebius() {
    return Cochain("moebius",
                   [](const Nat &n) {
                       int s = 1;
                       for (const auto &pp : factorize(n)) {
                           if (pp.r > 1) return Rational(0);
                           s = -s;
                       }
                       return Rational(s);
                   },
                   {true, false});
}

inline Cochain liouville() {
    return Cochain("liouville", [](const Nat &n) { return Rational(omega_grade(n) % 2 ? -1 : 1); },
                   {true, true});
}

inline Cochain divisor_count() {
    return Cochain("divisor_count",
                   [](const Nat &n) {
                       Integer d = 1;
                       for (const auto &pp : factorize(n)) d *= pp.r + 1;
                       return Rational(d);
                   },
                   {true, false});
}

inline const std::vector<std::string> &names() {
    static const std::vector<std::string> v{"zeta", "moebius", "identity", "square", "liouville",
                                            "divisor_count", "unit_mul", "unit_add"};
    return v;
}

inline Cochain by_name(const std::string &name) {
    if (name == "zeta" || name == "one") return zeta();
    if (name == "moebius" || name == "mu") return moebius();
    if (name == "identity" || name == "id") return identity();
    if (name == "square") return power(2);
    if (name == "liouville") return liouville();
    if (name == "divisor_count") return divisor_count();
    if (name == "unit_mul") return unit_mul();
    if (name == "unit_add") return unit_add();
    throw domain_error("unknown arithmetic function '" + name + "'");
}

} // namespace cochains
} // namespace dhopf
