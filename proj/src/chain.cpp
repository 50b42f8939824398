#include "pcg/chain.hpp"

namespace pcg {

ChainSpec::ChainSpec(u64 N_in, u64 g_in) : N(N_in), g(g_in % N_in) {
    if (N < 2) throw error(errc::out_of_range, "chain modulus must be >= 2");
    if (gcd(g, N) != 1)
        throw error(errc::not_a_unit, std::to_string(g) + " is not a unit mod " + std::to_string(N));
    order = multiplicative_order(g, N);
}

std::string ChainSpec::describe() const {
    return "chain(N=" + std::to_string(N) + ", g=" + std::to_string(g) + ", k=" + std::to_string(order) +
           ")";
}

u64 evaluate_chain(const ChainSpec& spec, const std::vector<u64>& heaps) {
    if (heaps.empty()) throw error(errc::precondition_violated, "chain needs at least one exponent");
    u64 acc = spec.g;
    for (u64 h : heaps) acc = mod_pow(acc, h, spec.N);
    return acc;
}

FlattenResult flatten_exponent(const ChainSpec& spec, const std::vector<u64>& heaps) {
    if (heaps.empty()) throw error(errc::precondition_violated, "chain needs at least one exponent");
    FlattenResult r;
    for (u64 h : heaps) {
        if (h == 0) throw error(errc::out_of_range, "exponents must be >= 1");
        if (!r.reduced) {
            unsigned __int128 wide = static_cast<unsigned __int128>(r.value) * h;
            if (wide <= UINT64_MAX) {
                r.value = static_cast<u64>(wide);
                continue;
            }
            r.reduced = true;
            r.value %= spec.order;
        }
        r.value = mul_mod(r.value, h % spec.order, spec.order);
    }
    // A reduced exponent of 0 stands for a full period: g^0 = g^k = 1.
    if (r.reduced && r.value == 0) r.value = spec.order;
    return r;
}

CompressionReport compression_check(const ChainSpec& spec, u64 bound, unsigned heap_count) {
    if (bound < 1 || heap_count < 1)
        throw error(errc::out_of_range, "compression check needs bound >= 1 and n >= 1");
    CompressionReport report{spec, bound, heap_count, 0, 0, {}};
    std::vector<u64> heaps(heap_count, 1);
    while (true) {
        ++report.total;
        bool tower_losing = evaluate_chain(spec, heaps) == spec.g;
        bool product_losing = flatten_exponent(spec, heaps).value % spec.order == 1 % spec.order;
        if (tower_losing) ++report.losing;
        if (tower_losing != product_losing) report.counterexamples.push_back(heaps);

        size_t i = 0;
        while (i < heap_count && ++heaps[i] > bound) heaps[i++] = 1;
        if (i == heap_count) break;
    }
    return report;
}

GameSpec chain_to_pcg(const ChainSpec& spec) { return GameSpec::chain(spec.N, spec.g); }

CrtLosingCheck crt_losing_check(const ChainSpec& spec, const std::vector<u64>& heaps) {
    if (spec.order < 2)
        throw error(errc::degenerate_order, "order 1 leaves nothing to split");
    u64 product = flatten_exponent(spec, heaps).value;
    CrtLosingCheck result;
    CrtUnityCheck unity = crt_check_unity(product, spec.order);
    result.overall = unity.overall;
    result.component_moduli = crt_split(spec.order);
    result.per_component = unity.per_component;
    return result;
}

} // namespace pcg
