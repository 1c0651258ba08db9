#include "qordkit/wreath.hpp"

#include <algorithm>
#include <functional>
#include <map>

#include "qordkit/error.hpp"

namespace qordkit {

int total_size(const PartitionValuedFunction& f)
{
    int total = 0;
    for (const auto& p : f) {
        total += size(p);
    }
    return total;
}

void validate(const CharacterTable& g, const PartitionValuedFunction& f, bool by_class)
{
    const int expected = by_class ? g.num_classes() : g.num_irreducibles();
    if (static_cast<int>(f.size()) != expected) {
        throw ValidationError(by_class ? "class label needs one partition per class of G"
                                       : "partition-valued function needs one partition per irreducible of G");
    }
    for (const auto& p : f) {
        if (!is_partition(p)) {
            throw ValidationError("entries must be weakly decreasing positive partitions");
        }
    }
}

namespace {

// Every tuple of partitions, one per slot, with total size n.
std::vector<std::vector<Partition>> partition_tuples(int slots, int n)
{
    std::vector<std::vector<Partition>> out;
    std::vector<Partition> cur(static_cast<std::size_t>(slots));
    std::function<void(int, int)> rec = [&](int slot, int remaining) {
        if (slot == slots) {
            if (remaining == 0) {
                out.push_back(cur);
            }
            return;
        }
        const int lo = slot == slots - 1 ? remaining : 0;
        for (int s = lo; s <= remaining; ++s) {
            for (const auto& p : partitions(s)) {
                cur[static_cast<std::size_t>(slot)] = p;
                rec(slot + 1, remaining - s);
            }
        }
    };
    if (slots == 0) {
        if (n == 0) {
            out.emplace_back();
        }
        return out;
    }
    rec(0, n);
    return out;
}

Integer integer_power(const Integer& base, int e)
{
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(e));
    return out;
}

Partition merged_cycle_type(const WreathClassLabel& rho)
{
    Partition all;
    for (const auto& p : rho) {
        all.insert(all.end(), p.begin(), p.end());
    }
    std::sort(all.begin(), all.end(), std::greater<>());
    return all;
}

} // namespace

Integer wreath_centralizer(const CharacterTable& g, const WreathClassLabel& rho)
{
    Integer z = 1;
    for (std::size_t c = 0; c < rho.size(); ++c) {
        const Integer zeta = g.group_order / g.classes[c].size;
        std::map<int, int> mult;
        for (int k : rho[c]) {
            ++mult[k];
        }
        for (const auto& [k, m] : mult) {
            z *= integer_power(Integer(k) * zeta, m) * factorial(m);
        }
    }
    return z;
}

std::vector<WreathClass> wreath_classes(const CharacterTable& g, int n)
{
    if (n < 0) {
        throw ValidationError("n must be non-negative");
    }
    const Integer order = integer_power(g.group_order, n) * factorial(n);
    std::vector<WreathClass> out;
    for (auto& label : partition_tuples(g.num_classes(), n)) {
        const Integer z = wreath_centralizer(g, label);
        out.push_back({std::move(label), order / z, z});
    }
    return out;
}

std::vector<PartitionValuedFunction> wreath_irreducible_labels(const CharacterTable& g, int n)
{
    return partition_tuples(g.num_irreducibles(), n);
}

namespace {

// chi of V^{(x)m} (x) M_mu at a class of G wr S_m.
Cyclotomic block_character(const CharacterTable& g, int v, const Partition& mu, const WreathClassLabel& sigma)
{
    Cyclotomic value(Rational(sn_character(mu, merged_cycle_type(sigma))));
    if (value.is_zero()) {
        return value;
    }
    for (std::size_t c = 0; c < sigma.size(); ++c) {
        if (!sigma[c].empty()) {
            value *= g.chars[static_cast<std::size_t>(v)][c].pow(static_cast<long long>(sigma[c].size()));
        }
    }
    return value;
}

struct CycleItem {
    std::size_t cls;
    int length;
    int count;
};

} // namespace

ClassFunction wreath_irreducible_character(const CharacterTable& g, const PartitionValuedFunction& lambda)
{
    validate(g, lambda, false);
    const int n = total_size(lambda);
    ClassFunction out;
    out.n = n;
    out.classes = wreath_classes(g, n);

    std::vector<int> slots;
    for (int v = 0; v < g.num_irreducibles(); ++v) {
        if (!lambda[static_cast<std::size_t>(v)].empty()) {
            slots.push_back(v);
        }
    }
    const auto k = static_cast<std::size_t>(g.num_classes());

    for (const auto& cls : out.classes) {
        std::vector<CycleItem> items;
        for (std::size_t c = 0; c < k; ++c) {
            std::map<int, int> mult;
            for (int len : cls.label[c]) {
                ++mult[len];
            }
            for (const auto& [len, m] : mult) {
                items.push_back({c, len, m});
            }
        }
        // Induction from prod_V G wr S_{n_V}: sum over ways to split the
        // cycles of rho among the slots, weighted by 1 / z(rho_V).
        Cyclotomic total(Rational(0), g.order);
        std::vector<int> remaining;
        for (const auto& it : items) {
            remaining.push_back(it.count);
        }
        std::function<void(std::size_t, const Cyclotomic&)> by_slot;
        std::function<void(std::size_t, std::size_t, int, WreathClassLabel&, const Cyclotomic&)> fill;

        by_slot = [&](std::size_t s, const Cyclotomic& acc) {
            if (s == slots.size()) {
                total += acc;
                return;
            }
            WreathClassLabel sigma(k);
            fill(s, 0, size(lambda[static_cast<std::size_t>(slots[s])]), sigma, acc);
        };
        fill = [&](std::size_t s, std::size_t item, int need, WreathClassLabel& sigma, const Cyclotomic& acc) {
            if (item == items.size()) {
                if (need != 0) {
                    return;
                }
                WreathClassLabel sorted = sigma;
                for (auto& p : sorted) {
                    std::sort(p.begin(), p.end(), std::greater<>());
                }
                const int v = slots[s];
                const Cyclotomic chi = block_character(g, v, lambda[static_cast<std::size_t>(v)], sorted);
                if (chi.is_zero()) {
                    return;
                }
                by_slot(s + 1, acc * chi / Cyclotomic(Rational(wreath_centralizer(g, sorted))));
                return;
            }
            const auto& it = items[item];
            int& left = remaining[item];
            const int max_take = std::min(left, need / it.length);
            // The last slot must take everything that is left.
            const int min_take = s + 1 == slots.size() ? left : 0;
            for (int take = min_take; take <= max_take; ++take) {
                left -= take;
                auto& part = sigma[it.cls];
                part.insert(part.end(), static_cast<std::size_t>(take), it.length);
                fill(s, item + 1, need - take * it.length, sigma, acc);
                part.resize(part.size() - static_cast<std::size_t>(take));
                left += take;
            }
        };
        if (slots.empty()) {
            total = Cyclotomic(1);
        } else {
            by_slot(0, Cyclotomic(1));
        }
        out.values.push_back(total * Cyclotomic(Rational(cls.centralizer)));
    }
    return out;
}

Cyclotomic wreath_inner_product(const ClassFunction& f, const ClassFunction& h)
{
    if (f.n != h.n || f.values.size() != h.values.size()) {
        throw ValidationError("class functions live on different groups");
    }
    Cyclotomic sum;
    for (std::size_t i = 0; i < f.values.size(); ++i) {
        if (f.values[i].is_zero() || h.values[i].is_zero()) {
            continue;
        }
        sum += f.values[i] * h.values[i].conj() / Cyclotomic(Rational(f.classes[i].centralizer));
    }
    return sum;
}

std::optional<PartitionValuedFunction> pad(const CharacterTable& g, const PartitionValuedFunction& lambda, int n)
{
    validate(g, lambda, false);
    const auto t = static_cast<std::size_t>(g.trivial_index());
    const int first = n - total_size(lambda);
    const Partition& tail = lambda[t];
    if (first < 0 || (!tail.empty() && first < tail.front())) {
        return std::nullopt;
    }
    PartitionValuedFunction out = lambda;
    out[t].clear();
    if (first > 0) {
        out[t].push_back(first);
    }
    out[t].insert(out[t].end(), tail.begin(), tail.end());
    return out;
}

int min_valid_n(const CharacterTable& g, const std::vector<PartitionValuedFunction>& labels)
{
    const auto t = static_cast<std::size_t>(g.trivial_index());
    int n = 0;
    for (const auto& l : labels) {
        validate(g, l, false);
        n = std::max(n, total_size(l) + (l[t].empty() ? 0 : l[t].front()));
    }
    return n;
}

StabilityTable tensor_stability_table(const CharacterTable& g, const PartitionValuedFunction& lambda,
                                      const PartitionValuedFunction& mu, const PartitionValuedFunction& nu,
                                      int n_first, int n_last)
{
    StabilityTable out;
    for (int n = n_first; n <= n_last; ++n) {
        StabilityEntry e{n, std::nullopt};
        const auto a = pad(g, lambda, n);
        const auto b = pad(g, mu, n);
        const auto c = pad(g, nu, n);
        if (a && b && c) {
            const ClassFunction fa = wreath_irreducible_character(g, *a);
            const ClassFunction fb = wreath_irreducible_character(g, *b);
            const ClassFunction fc = wreath_irreducible_character(g, *c);
            ClassFunction prod = fa;
            for (std::size_t i = 0; i < prod.values.size(); ++i) {
                prod.values[i] *= fb.values[i];
            }
            const Cyclotomic m = wreath_inner_product(prod, fc);
            if (!m.is_rational() || !is_integer(m.rational_part()) || m.rational_part() < 0) {
                throw Error("internal: tensor multiplicity is not a non-negative integer");
            }
            e.multiplicity = m.rational_part().get_num();
        }
        out.entries.push_back(std::move(e));
    }
    std::vector<const StabilityEntry*> valid;
    for (const auto& e : out.entries) {
        if (e.multiplicity) {
            valid.push_back(&e);
        }
    }
    if (valid.size() >= 4) {
        const auto& last = *valid.back()->multiplicity;
        out.tail_constant = std::all_of(valid.end() - 4, valid.end(),
                                        [&](const StabilityEntry* e) { return *e->multiplicity == last; });
    }
    if (!out.entries.empty() && out.entries.back().multiplicity) {
        const Integer last = *out.entries.back().multiplicity;
        int onset = out.entries.back().n;
        for (std::size_t i = out.entries.size(); i-- > 0;) {
            if (!out.entries[i].multiplicity || *out.entries[i].multiplicity != last) {
                break;
            }
            onset = out.entries[i].n;
        }
        out.observed_onset = onset;
    }
    return out;
}

StabilityTable tensor_stability_table(const CharacterTable& g, const PartitionValuedFunction& lambda,
                                      const PartitionValuedFunction& mu, const PartitionValuedFunction& nu)
{
    const int first = min_valid_n(g, {lambda, mu, nu});
    return tensor_stability_table(g, lambda, mu, nu, first, first + 6);
}

FactoredRational diag_induced_series(const CharacterTable& g, int i)
{
    if (i < 0 || i >= g.num_irreducibles()) {
        throw ValidationError("irreducible index out of range");
    }
    const int k = g.num_irreducibles();
    FactoredRational sum = FactoredRational::zero(k);
    for (int c = 0; c < g.num_classes(); ++c) {
        LinearForm l;
        for (int j = 0; j < k; ++j) {
            l.coeffs.push_back(g.chars[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)].lift(g.order));
        }
        const Cyclotomic weight = Cyclotomic(make_rational(g.classes[static_cast<std::size_t>(c)].size, g.group_order)) *
                                  g.chars[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)].conj();
        sum += FactoredRational::geometric(l).scaled(weight);
    }
    return sum;
}

std::map<std::vector<int>, Integer> decompose_induced(const CharacterTable& g, int i, int n)
{
    if (i < 0 || i >= g.num_irreducibles()) {
        throw ValidationError("irreducible index out of range");
    }
    if (n < 1) {
        throw ValidationError("n must be at least 1");
    }
    const int k = g.num_irreducibles();
    std::map<std::vector<int>, Integer> out;
    std::vector<int> tuple(static_cast<std::size_t>(n), 0);
    for (;;) {
        std::vector<Cyclotomic> restricted(static_cast<std::size_t>(g.num_classes()));
        for (int c = 0; c < g.num_classes(); ++c) {
            Cyclotomic v(1);
            for (int j : tuple) {
                v *= g.chars[static_cast<std::size_t>(j)][static_cast<std::size_t>(c)];
            }
            restricted[static_cast<std::size_t>(c)] = v;
        }
        const Cyclotomic m = g.inner_product(g.chars[static_cast<std::size_t>(i)], restricted);
        if (!m.is_rational() || !is_integer(m.rational_part()) || m.rational_part() < 0) {
            throw Error("internal: induced multiplicity is not a non-negative integer");
        }
        if (m.rational_part() != 0) {
            out.emplace(tuple, m.rational_part().get_num());
        }
        std::size_t pos = tuple.size();
        while (pos > 0 && tuple[pos - 1] == k - 1) {
            tuple[--pos] = 0;
        }
        if (pos == 0) {
            break;
        }
        ++tuple[pos - 1];
    }
    return out;
}

Polynomial monomial_image(const std::map<std::vector<int>, Integer>& decomposition, int nvars)
{
    Polynomial p(nvars);
    for (const auto& [tuple, mult] : decomposition) {
        Exponent e(static_cast<std::size_t>(nvars), 0);
        for (int j : tuple) {
            ++e.at(static_cast<std::size_t>(j));
        }
        p.add_term(e, Cyclotomic(Rational(mult)));
    }
    return p;
}

} // namespace qordkit
