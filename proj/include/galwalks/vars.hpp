#ifndef GALWALKS_VARS_HPP
#define GALWALKS_VARS_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gw {

using Rational = mpq_class;
using Integer = mpz_class;

// Fixed slots for the main variables; everything else (model parameters,
// elimination helpers) is registered on demand.
enum : int { VX = 0, VY = 1, VT = 2, VZ = 3 };

constexpr int kMaxVars = 12;

// Process-wide variable registry. Ids are stable for the lifetime of the
// process; the monomial order is lex with smaller id = more significant,
// so X > Y > t > Z > registered extras.
class VarTable {
public:
    static VarTable& instance();

    int id(const std::string& name);       // registers if absent
    int find(const std::string& name) const;  // -1 if absent
    const std::string& name(int id) const { return names_.at(id); }
    int size() const { return static_cast<int>(names_.size()); }

private:
    VarTable() : names_{"X", "Y", "t", "Z"} {}
    std::vector<std::string> names_;
};

inline VarTable& VarTable::instance() {
    static VarTable tab;
    return tab;
}

inline int VarTable::find(const std::string& name) const {
    for (int i = 0; i < static_cast<int>(names_.size()); ++i)
        if (names_[i] == name) return i;
    return -1;
}

inline int VarTable::id(const std::string& name) {
    int i = find(name);
    if (i >= 0) return i;
    if (static_cast<int>(names_.size()) >= kMaxVars)
        throw std::runtime_error("variable registry full: " + name);
    names_.push_back(name);
    return static_cast<int>(names_.size()) - 1;
}

struct Monomial {
    std::array<uint16_t, kMaxVars> e{};

    uint16_t operator[](int v) const { return e[v]; }
    uint16_t& operator[](int v) { return e[v]; }

    bool is_one() const {
        for (auto x : e)
            if (x) return false;
        return true;
    }
    bool divides(const Monomial& m) const {
        for (int i = 0; i < kMaxVars; ++i)
            if (e[i] > m.e[i]) return false;
        return true;
    }
    Monomial operator*(const Monomial& m) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = uint16_t(e[i] + m.e[i]);
        return r;
    }
    // caller guarantees divisibility
    Monomial operator/(const Monomial& m) const {
        Monomial r;
        for (int i = 0; i < kMaxVars; ++i) r.e[i] = uint16_t(e[i] - m.e[i]);
        return r;
    }
    bool operator==(const Monomial& m) const { return e == m.e; }
    bool operator!=(const Monomial& m) const { return e != m.e; }
    // lex, id 0 most significant
    bool operator<(const Monomial& m) const { return e < m.e; }
    bool operator>(const Monomial& m) const { return e > m.e; }

    static Monomial var(int v, uint16_t k = 1) {
        Monomial r;
        r.e[v] = k;
        return r;
    }
};

}  // namespace gw

#endif
