#include "homlab/chain.hpp"

namespace homlab {

void TupleChain::add(const Tuple& t, const BigInt& coefficient)
{
    if (coefficient.is_zero())
        return;
    auto [it, inserted] = terms_.try_emplace(t, coefficient);
    if (inserted)
        return;
    it->second += coefficient;
    if (it->second.is_zero())
        terms_.erase(it);
}

void TupleChain::add(const TupleChain& other, const BigInt& scale)
{
    for (const auto& [t, c] : other.terms_)
        add(t, c * scale);
}

BigInt TupleChain::coefficient(const Tuple& t) const
{
    auto it = terms_.find(t);
    return it == terms_.end() ? BigInt(0) : it->second;
}

std::string format_tuple(const Tuple& t, bool one_based)
{
    std::string out = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i)
            out += ',';
        out += std::to_string(t[i] + (one_based ? 1 : 0));
    }
    return out + ")";
}

std::string format_chain(const TupleChain& c, bool one_based)
{
    if (c.is_zero())
        return "0";
    std::string out;
    bool first = true;
    for (const auto& [t, coef] : c.terms()) {
        BigInt mag = coef < 0 ? BigInt(-coef) : coef;
        if (first)
            out += coef < 0 ? "-" : "";
        else
            out += coef < 0 ? " - " : " + ";
        if (mag != 1)
            out += mag.str();
        out += format_tuple(t, one_based);
        first = false;
    }
    return out;
}

} // namespace homlab
