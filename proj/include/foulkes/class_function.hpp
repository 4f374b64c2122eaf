#pragma once

#include "foulkes/bigint.hpp"
#include "foulkes/partition.hpp"

namespace foulkes {

/// An integer-valued class function of S_n, stored by cycle type.
/// Absent keys are zero; zero values are never stored.
class ClassFunction {
public:
    ClassFunction() = default;
    explicit ClassFunction(int degree) : degree_(degree) {}

    int degree() const noexcept { return degree_; }
    const PartitionMap<BigInt>& values() const noexcept { return values_; }

    BigInt value(const Partition& cycle_type) const;
    /// Throws InputError if the cycle type has the wrong weight.
    void set(const Partition& cycle_type, BigInt v);

    friend bool operator==(const ClassFunction&, const ClassFunction&) = default;

private:
    int degree_ = 0;
    PartitionMap<BigInt> values_;
};

}  // namespace foulkes
