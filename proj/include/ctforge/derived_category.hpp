#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ctforge/errors.hpp"
#include "ctforge/root_data.hpp"

namespace ctforge {

/// The indecomposable tau^twist(P_vertex) of D^b(kQ). Larger twist means
/// further in the tau direction (leftwards in AR-quiver pictures).
struct DerivedObject {
    int vertex = 1;
    Int twist = 0;
    friend auto operator<=>(const DerivedObject&, const DerivedObject&) = default;
};

/// M[shift] for an indecomposable kQ-module M, recorded by its dimension vector.
struct ModuleForm {
    IntVector dim;
    Int shift = 0;
    friend bool operator==(const ModuleForm&, const ModuleForm&) = default;
};

inline DerivedObject tau(DerivedObject x, Int steps = 1) { return {x.vertex, checked::add(x.twist, steps)}; }

inline std::string to_string(const DerivedObject& x) {
    return "(" + std::to_string(x.vertex) + "," + std::to_string(x.twist) + ")";
}

/// I_i = tau^{-offset_i}(P_{sigma_i}); both vectors are indexed by vertex - 1.
struct NakayamaPermutationData {
    std::vector<int> sigma;
    std::vector<Int> offset;

    int sigma_of(int i) const { return sigma[static_cast<std::size_t>(i - 1)]; }
    Int offset_of(int i) const { return offset[static_cast<std::size_t>(i - 1)]; }
    int sigma_inverse_of(int j) const {
        for (std::size_t k = 0; k < sigma.size(); ++k)
            if (sigma[k] == j) return static_cast<int>(k + 1);
        throw InternalError("sigma is not a permutation");
    }
};

namespace detail {

inline int find_vector(const std::vector<IntVector>& table, const IntVector& v) {
    for (std::size_t k = 0; k < table.size(); ++k)
        if (table[k] == v) return static_cast<int>(k + 1);
    return 0;
}

} // namespace detail

/// Locates each injective in the AR quiver by walking tau^{-1} from every
/// projective through the Coxeter transformation.
inline NakayamaPermutationData nakayama_data(const QuiverOrientation& q) {
    const int r = q.rank();
    const int h = coxeter_number(q.diagram());
    const IntMatrix phi_inv = coxeter_matrix(q).inverse();
    std::vector<IntVector> injectives;
    for (int i = 1; i <= r; ++i) injectives.push_back(q.injective_dim(i));

    NakayamaPermutationData nd;
    nd.sigma.assign(static_cast<std::size_t>(r), 0);
    nd.offset.assign(static_cast<std::size_t>(r), -1);
    for (int j = 1; j <= r; ++j) {
        IntVector v = q.projective_dim(j);
        for (Int steps = 0;; ++steps) {
            if (steps > h) throw InternalError("no injective found on the tau-orbit of P_" + std::to_string(j));
            if (int i = detail::find_vector(injectives, v); i != 0) {
                auto k = static_cast<std::size_t>(i - 1);
                if (nd.sigma[k] != 0) throw InternalError("injective reached from two projectives");
                nd.sigma[k] = j;
                nd.offset[k] = steps;
                break;
            }
            v = phi_inv.apply(v);
        }
    }
    return nd;
}

/// Combinatorial model of D^b(kQ) for a Dynkin quiver Q.
///
/// Objects are tau-orbit coordinates. The functors are realized on coordinates
/// through the Nakayama permutation data:
///   nu  : (i, l) -> (sigma(i), l - p_i)
///   [1] : (i, l) -> (sigma(i), l - p_i - 1)       ([1] = tau^{-1} nu)
/// Hom dimensions are read off the module normal form (M[s]) via the Euler form.
class DerivedCategory {
public:
    explicit DerivedCategory(QuiverOrientation q)
        : q_(std::move(q)),
          h_(coxeter_number(q_.diagram())),
          phi_(ctforge::coxeter_matrix(q_)),
          phi_inv_(phi_.inverse()),
          nd_(nakayama_data(q_)),
          window_(4 * static_cast<Int>(h_)) {
        for (int i = 1; i <= rank(); ++i) {
            projectives_.push_back(q_.projective_dim(i));
            injectives_.push_back(q_.injective_dim(i));
        }
        build_table();
    }

    const QuiverOrientation& quiver() const { return q_; }
    const DynkinDiagram& diagram() const { return q_.diagram(); }
    int rank() const { return q_.rank(); }
    int coxeter() const { return h_; }
    const IntMatrix& coxeter_matrix() const { return phi_; }
    const NakayamaPermutationData& nakayama() const { return nd_; }
    Int window() const { return window_; }

    DerivedObject shift(DerivedObject x, Int r = 1) const {
        for (; r > 0; --r) {
            int i = x.vertex;
            x = {nd_.sigma_of(i), checked::sub(x.twist, nd_.offset_of(i) + 1)};
        }
        for (; r < 0; ++r) {
            int i = nd_.sigma_inverse_of(x.vertex);
            x = {i, checked::add(x.twist, nd_.offset_of(i) + 1)};
        }
        return x;
    }

    DerivedObject nu(DerivedObject x) const {
        return {nd_.sigma_of(x.vertex), checked::sub(x.twist, nd_.offset_of(x.vertex))};
    }

    DerivedObject nu_power(DerivedObject x, Int k) const {
        if (k < 0) throw ValidationError("negative power of nu is not supported");
        for (; k > 0; --k) x = nu(x);
        return x;
    }

    /// nu o [1], which acts as tau^{1-h}.
    DerivedObject g(DerivedObject x) const { return nu(shift(x, 1)); }

    DerivedObject g_power(DerivedObject x, Int k) const {
        return {x.vertex, checked::add(x.twist, checked::mul(k, 1 - static_cast<Int>(h_)))};
    }

    /// nu_d = nu o [-d].
    DerivedObject nu_d(DerivedObject x, int d) const { return nu(shift(x, -d)); }

    ModuleForm to_module_form(DerivedObject x) const {
        const Int base = -window_;
        const Int last = window_;
        const auto& row = table_[static_cast<std::size_t>(x.vertex - 1)];
        if (x.twist >= base && x.twist <= last) return row[static_cast<std::size_t>(x.twist - base)];
        // Outside the cached strip keep stepping from its edge.
        if (x.twist > last) {
            ModuleForm f = row.back();
            for (Int l = last; l < x.twist; ++l) f = step_tau(f);
            return f;
        }
        ModuleForm f = row.front();
        for (Int l = base; l > x.twist; --l) f = step_tau_inverse(f);
        return f;
    }

    /// Inverse of to_module_form. Walks tau inside mod kQ down to a projective,
    /// then applies the shift.
    DerivedObject from_module_form(const ModuleForm& m) const {
        if (m.dim.size() != static_cast<std::size_t>(rank())) throw ValidationError("dimension vector length");
        IntVector v = m.dim;
        for (Int steps = 0; steps <= window_; ++steps) {
            if (int j = detail::find_vector(projectives_, v); j != 0) return shift({j, -steps}, m.shift);
            v = phi_.apply(v);
            for (Int c : v)
                if (c < 0) throw ValidationError("dimension vector is not that of an indecomposable module");
        }
        throw ValidationError("dimension vector is not that of an indecomposable module");
    }

    std::size_t hom_dim(DerivedObject x, DerivedObject y) const {
        ModuleForm m = to_module_form(x);
        ModuleForm n = to_module_form(y);
        Int e = euler_form(q_, m.dim, n.dim);
        if (n.shift == m.shift) return e > 0 ? static_cast<std::size_t>(e) : 0;
        if (n.shift == m.shift + 1) return e < 0 ? static_cast<std::size_t>(-e) : 0;
        return 0;
    }

    std::size_t ext_dim(DerivedObject x, DerivedObject y, Int i) const { return hom_dim(x, shift(y, i)); }

    bool is_projective_dim(const IntVector& v) const { return detail::find_vector(projectives_, v) != 0; }
    bool is_injective_dim(const IntVector& v) const { return detail::find_vector(injectives_, v) != 0; }

private:
    ModuleForm step_tau(const ModuleForm& f) const {
        if (int j = detail::find_vector(projectives_, f.dim); j != 0)
            return {injectives_[static_cast<std::size_t>(j - 1)], f.shift - 1};
        return {phi_.apply(f.dim), f.shift};
    }

    ModuleForm step_tau_inverse(const ModuleForm& f) const {
        if (int j = detail::find_vector(injectives_, f.dim); j != 0)
            return {projectives_[static_cast<std::size_t>(j - 1)], f.shift + 1};
        return {phi_inv_.apply(f.dim), f.shift};
    }

    void build_table() {
        const auto width = static_cast<std::size_t>(2 * window_ + 1);
        table_.assign(static_cast<std::size_t>(rank()), std::vector<ModuleForm>(width));
        for (int i = 1; i <= rank(); ++i) {
            auto& row = table_[static_cast<std::size_t>(i - 1)];
            const auto zero = static_cast<std::size_t>(window_);
            row[zero] = {projectives_[static_cast<std::size_t>(i - 1)], 0};
            for (std::size_t k = zero + 1; k < width; ++k) row[k] = step_tau(row[k - 1]);
            for (std::size_t k = zero; k-- > 0;) row[k] = step_tau_inverse(row[k + 1]);
        }
    }

    QuiverOrientation q_;
    int h_;
    IntMatrix phi_;
    IntMatrix phi_inv_;
    NakayamaPermutationData nd_;
    Int window_;
    std::vector<IntVector> projectives_;
    std::vector<IntVector> injectives_;
    std::vector<std::vector<ModuleForm>> table_;
};

} // namespace ctforge
