#include "hsvqe/fermion_op.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "hsvqe/errors.hpp"

namespace hsvqe {

namespace {

using OpKey = std::vector<int>; // 2 * mode + dagger, in sequence

OpKey key_of(const std::vector<LadderOp>& ops) {
    OpKey k;
    k.reserve(ops.size());
    for (const auto& o : ops) k.push_back(2 * o.mode + (o.dagger ? 1 : 0));
    return k;
}

std::vector<LadderOp> ops_of(const OpKey& k) {
    std::vector<LadderOp> ops;
    ops.reserve(k.size());
    for (int code : k) ops.push_back({code / 2, (code % 2) != 0});
    return ops;
}

// Reorders one term into canonical form, accumulating the resulting sum.
// One rewrite step is applied at the first out-of-order adjacent pair and
// the remainder handled recursively; products are at most four operators
// deep, so recursion stays shallow.
void normal_order_into(double coef, std::vector<LadderOp> ops,
                       std::map<OpKey, double>& acc) {
    for (std::size_t i = 0; i + 1 < ops.size(); ++i) {
        const LadderOp a = ops[i];
        const LadderOp b = ops[i + 1];
        if (!a.dagger && b.dagger) {
            // a_p a+_q = delta_pq - a+_q a_p
            if (a.mode == b.mode) {
                std::vector<LadderOp> contracted;
                contracted.insert(contracted.end(), ops.begin(),
                                  ops.begin() + static_cast<std::ptrdiff_t>(i));
                contracted.insert(contracted.end(),
                                  ops.begin() + static_cast<std::ptrdiff_t>(i + 2),
                                  ops.end());
                normal_order_into(coef, std::move(contracted), acc);
            }
            std::swap(ops[i], ops[i + 1]);
            normal_order_into(-coef, std::move(ops), acc);
            return;
        }
        if (a.dagger == b.dagger) {
            if (a.mode == b.mode) return; // nilpotent
            if (a.mode < b.mode) {
                std::swap(ops[i], ops[i + 1]);
                normal_order_into(-coef, std::move(ops), acc);
                return;
            }
        }
    }
    acc[key_of(ops)] += coef;
}

FermionOperatorSum from_accumulator(int n_modes, const std::map<OpKey, double>& acc) {
    FermionOperatorSum out;
    out.n_modes = n_modes;
    for (const auto& [key, coef] : acc) {
        if (std::abs(coef) < kCoefficientDropThreshold) continue;
        out.terms.push_back({coef, ops_of(key)});
    }
    return out;
}

void check_canonical(const FermionTerm& t) {
    bool in_annihilations = false;
    int last_cre = -1, last_ann = -1;
    for (const auto& o : t.ops) {
        if (o.dagger) {
            if (in_annihilations || (last_cre >= 0 && o.mode >= last_cre)) {
                throw std::invalid_argument("term is not in canonical normal order");
            }
            last_cre = o.mode;
        } else {
            if (in_annihilations && last_ann >= 0 && o.mode >= last_ann) {
                throw std::invalid_argument("term is not in canonical normal order");
            }
            in_annihilations = true;
            last_ann = o.mode;
        }
    }
}

} // namespace

std::vector<int> spatial_to_spin_modes(const std::vector<int>& spatial,
                                       SpinOrder order, int n_spatial) {
    std::vector<int> modes;
    for (int p : spatial) {
        if (p < 0 || p >= n_spatial) {
            throw input_error("spatial orbital index " + std::to_string(p) +
                              " out of range for " + std::to_string(n_spatial) +
                              " orbitals");
        }
        if (order == SpinOrder::Interleaved) {
            modes.push_back(2 * p);
            modes.push_back(2 * p + 1);
        } else {
            modes.push_back(p);
            modes.push_back(p + n_spatial);
        }
    }
    std::sort(modes.begin(), modes.end());
    return modes;
}

std::pair<std::vector<int>, std::vector<int>>
split_frozen_by_occupation(const std::vector<int>& frozen_spatial, int n_electrons) {
    if (n_electrons % 2 != 0) {
        throw input_error("closed-shell filling requires an even electron count");
    }
    std::vector<int> occupied, removed;
    for (int p : frozen_spatial) {
        if (p < n_electrons / 2) occupied.push_back(p);
        else removed.push_back(p);
    }
    std::sort(occupied.begin(), occupied.end());
    std::sort(removed.begin(), removed.end());
    return {occupied, removed};
}

FermionOperatorSum normal_ordered(const FermionOperatorSum& op) {
    std::map<OpKey, double> acc;
    for (const auto& t : op.terms) {
        for (const auto& o : t.ops) {
            if (o.mode < 0 || o.mode >= op.n_modes) {
                throw std::invalid_argument("ladder operator mode out of range");
            }
        }
        normal_order_into(t.coefficient, t.ops, acc);
    }
    return from_accumulator(op.n_modes, acc);
}

FermionOperatorSum build_fermion_hamiltonian(const FermionIntegrals& integrals,
                                             SpinOrder order) {
    const int n = integrals.n_orbitals;
    const auto mode = [&](int p, int s) {
        return order == SpinOrder::Interleaved ? 2 * p + s : p + s * n;
    };

    FermionOperatorSum raw;
    raw.n_modes = 2 * n;
    raw.terms.push_back({integrals.core_energy, {}});
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            const double h = integrals.h1(p, q);
            if (h == 0.0) continue;
            for (int s = 0; s < 2; ++s) {
                raw.terms.push_back({h, {{mode(p, s), true}, {mode(q, s), false}}});
            }
        }
    }
    for (int p = 0; p < n; ++p) {
        for (int q = 0; q < n; ++q) {
            for (int r = 0; r < n; ++r) {
                for (int s = 0; s < n; ++s) {
                    const double g = integrals.eri(p, q, r, s);
                    if (g == 0.0) continue;
                    for (int s1 = 0; s1 < 2; ++s1) {
                        for (int s2 = 0; s2 < 2; ++s2) {
                            raw.terms.push_back({0.5 * g,
                                                 {{mode(p, s1), true},
                                                  {mode(r, s2), true},
                                                  {mode(s, s2), false},
                                                  {mode(q, s1), false}}});
                        }
                    }
                }
            }
        }
    }
    return normal_ordered(raw);
}

FermionOperatorSum freeze_orbitals(const FermionOperatorSum& op,
                                   const std::vector<int>& frozen_occupied,
                                   const std::vector<int>& removed_virtual) {
    std::set<int> frozen(frozen_occupied.begin(), frozen_occupied.end());
    std::set<int> removed(removed_virtual.begin(), removed_virtual.end());
    for (int m : frozen) {
        if (m < 0 || m >= op.n_modes) {
            throw input_error("frozen mode " + std::to_string(m) + " out of range");
        }
        if (removed.count(m)) {
            throw input_error("mode " + std::to_string(m) +
                              " listed as both frozen and removed");
        }
    }
    for (int m : removed) {
        if (m < 0 || m >= op.n_modes) {
            throw input_error("removed mode " + std::to_string(m) + " out of range");
        }
    }

    std::vector<int> new_index(static_cast<std::size_t>(op.n_modes), -1);
    int next = 0;
    for (int m = 0; m < op.n_modes; ++m) {
        if (!frozen.count(m) && !removed.count(m)) {
            new_index[static_cast<std::size_t>(m)] = next++;
        }
    }

    std::map<OpKey, double> acc;
    for (const auto& t : op.terms) {
        check_canonical(t);
        bool dropped = false;
        for (const auto& o : t.ops) {
            if (removed.count(o.mode)) { dropped = true; break; }
        }
        if (dropped) continue;
        // A frozen mode appearing in only one of the two ladder blocks moves
        // the term out of the frozen-occupied sector.
        for (int f : frozen) {
            int count = 0;
            for (const auto& o : t.ops) {
                if (o.mode == f) ++count;
            }
            if (count == 1) { dropped = true; break; }
        }
        if (dropped) continue;

        double sign = 1.0;
        std::vector<LadderOp> ops = t.ops;
        // Contract each frozen creation/annihilation pair against the filled
        // mode, tracking the fermionic swaps needed to bring both operators
        // to the front.
        for (int f : frozen) {
            auto cre = std::find(ops.begin(), ops.end(), LadderOp{f, true});
            if (cre == ops.end()) continue;
            if ((cre - ops.begin()) % 2 != 0) sign = -sign;
            ops.erase(cre);
            auto ann = std::find(ops.begin(), ops.end(), LadderOp{f, false});
            if ((ann - ops.begin()) % 2 != 0) sign = -sign;
            ops.erase(ann);
        }
        // Each surviving operator commutes past the occupied frozen modes
        // below it when the mode ordering is compacted.
        for (const auto& o : ops) {
            int below = 0;
            for (int f : frozen) {
                if (f < o.mode) ++below;
            }
            if (below % 2 != 0) sign = -sign;
        }
        std::vector<LadderOp> relabeled;
        relabeled.reserve(ops.size());
        for (const auto& o : ops) {
            relabeled.push_back({new_index[static_cast<std::size_t>(o.mode)], o.dagger});
        }
        acc[key_of(relabeled)] += sign * t.coefficient;
    }
    return from_accumulator(next, acc);
}

TermClass classify_term(const FermionTerm& term) {
    check_canonical(term);
    std::vector<int> cre, ann;
    for (const auto& o : term.ops) {
        (o.dagger ? cre : ann).push_back(o.mode);
    }
    if (term.ops.empty()) return TermClass::Number;
    if (cre.size() != ann.size()) {
        throw input_error("term does not conserve particle number");
    }
    if (term.ops.size() == 2) {
        return cre[0] == ann[0] ? TermClass::Number : TermClass::Excitation;
    }
    if (term.ops.size() == 4) {
        std::set<int> cs(cre.begin(), cre.end());
        std::set<int> as(ann.begin(), ann.end());
        std::vector<int> common;
        std::set_intersection(cs.begin(), cs.end(), as.begin(), as.end(),
                              std::back_inserter(common));
        if (common.size() == 2) return TermClass::CoulombExchange;
        if (common.size() == 1) return TermClass::NumberExcitation;
        return TermClass::DoubleExcitation;
    }
    throw input_error("term has unsupported operator count " +
                      std::to_string(term.ops.size()));
}

} // namespace hsvqe
