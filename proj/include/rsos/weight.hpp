#pragma once

namespace rsos {

/// The level-k weight a Lambda_1 + (k-a) Lambda_0.
struct WeightIndex {
    int k = 0;
    int a = 0;

    /// <h_0, lambda> and <h_1, lambda>.
    int h0() const { return k - a; }
    int h1() const { return a; }
    /// The 0 <-> 1 exchange sigma.
    WeightIndex sigma() const { return {k, k - a}; }
    friend bool operator==(const WeightIndex&, const WeightIndex&) = default;
    friend auto operator<=>(const WeightIndex&, const WeightIndex&) = default;
};

} // namespace rsos
