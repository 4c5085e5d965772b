#pragma once

// Finitely supported vectors over an ordered key set, and linear maps between them.

#include "wmha/scalar.hpp"

#include <array>
#include <cstddef>
#include <functional>
#include <initializer_list>
#include <map>
#include <type_traits>
#include <utility>
#include <vector>

namespace wmha {

template <class K>
class FinVec {
public:
    using key_type = K;
    using storage = std::map<K, Scalar>;
    using const_iterator = typename storage::const_iterator;

    FinVec() = default;
    FinVec(std::initializer_list<std::pair<const K, Scalar>> init) {
        for (const auto& [k, v] : init) add(k, v);
    }

    static FinVec basis(const K& k) {
        FinVec v;
        v.entries_.emplace(k, Scalar(1));
        return v;
    }

    /// Coefficient at k (zero when absent).
    Scalar operator[](const K& k) const {
        auto it = entries_.find(k);
        return it == entries_.end() ? Scalar() : it->second;
    }

    void add(const K& k, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, inserted] = entries_.try_emplace(k, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) entries_.erase(it);
        }
    }

    void set(const K& k, const Scalar& c) {
        if (c.is_zero())
            entries_.erase(k);
        else
            entries_[k] = c;
    }

    /// this += c * other
    void axpy(const Scalar& c, const FinVec& other) {
        if (c.is_zero()) return;
        for (const auto& [k, v] : other.entries_) add(k, c * v);
    }

    bool is_zero() const { return entries_.empty(); }
    std::size_t support_size() const { return entries_.size(); }
    const_iterator begin() const { return entries_.begin(); }
    const_iterator end() const { return entries_.end(); }
    const storage& entries() const { return entries_; }

    FinVec& operator+=(const FinVec& o) {
        for (const auto& [k, v] : o.entries_) add(k, v);
        return *this;
    }
    FinVec& operator-=(const FinVec& o) {
        for (const auto& [k, v] : o.entries_) add(k, -v);
        return *this;
    }
    FinVec& operator*=(const Scalar& c) {
        if (c.is_zero()) {
            entries_.clear();
            return *this;
        }
        for (auto& [k, v] : entries_) v *= c;
        return *this;
    }

    friend FinVec operator+(FinVec a, const FinVec& b) { return a += b; }
    friend FinVec operator-(FinVec a, const FinVec& b) { return a -= b; }
    friend FinVec operator*(const Scalar& c, FinVec a) { return a *= c; }
    friend FinVec operator*(FinVec a, const Scalar& c) { return a *= c; }
    FinVec operator-() const { return Scalar(-1) * *this; }

    friend bool operator==(const FinVec& a, const FinVec& b) { return a.entries_ == b.entries_; }
    friend bool operator!=(const FinVec& a, const FinVec& b) { return !(a == b); }

    /// Applies a key-wise linear map given on basis keys.
    template <class K2, class F>
    FinVec<K2> map_linear(F&& on_basis) const {
        FinVec<K2> out;
        for (const auto& [k, v] : entries_) out.axpy(v, on_basis(k));
        return out;
    }

private:
    storage entries_;
};

using Index = std::size_t;
using Key2 = std::pair<Index, Index>;
using Key3 = std::array<Index, 3>;

using Element = FinVec<Index>;   // element of an algebra A in its basis
using Tensor2 = FinVec<Key2>;    // element of A (x) A
using Tensor3 = FinVec<Key3>;    // element of A (x) A (x) A

template <class K1, class K2>
FinVec<std::pair<K1, K2>> tensor(const FinVec<K1>& u, const FinVec<K2>& v) {
    FinVec<std::pair<K1, K2>> out;
    for (const auto& [k1, a] : u)
        for (const auto& [k2, b] : v) out.add({k1, k2}, a * b);
    return out;
}

inline Tensor2 tensor2(const Element& u, const Element& v) { return tensor(u, v); }

inline Tensor3 tensor3(const Element& u, const Element& v, const Element& w) {
    Tensor3 out;
    for (const auto& [i, a] : u)
        for (const auto& [j, b] : v)
            for (const auto& [k, c] : w) out.add({i, j, k}, a * b * c);
    return out;
}

/// A linear map stored column-wise on the finitely many source keys it is defined on.
template <class K1, class K2>
class LinMap {
public:
    LinMap() = default;

    static LinMap identity(const std::vector<K1>& keys)
        requires std::is_same_v<K1, K2>
    {
        LinMap m;
        for (const auto& k : keys) m.columns_[k] = FinVec<K2>::basis(k);
        return m;
    }

    void set_column(const K1& k, FinVec<K2> image) { columns_[k] = std::move(image); }

    FinVec<K2> column(const K1& k) const {
        auto it = columns_.find(k);
        return it == columns_.end() ? FinVec<K2>{} : it->second;
    }

    FinVec<K2> apply(const FinVec<K1>& v) const {
        FinVec<K2> out;
        for (const auto& [k, c] : v) {
            auto it = columns_.find(k);
            if (it != columns_.end()) out.axpy(c, it->second);
        }
        return out;
    }

    /// (*this) after inner: first inner, then this.
    template <class K0>
    LinMap<K0, K2> after(const LinMap<K0, K1>& inner) const {
        LinMap<K0, K2> out;
        for (const auto& [k, col] : inner.columns()) out.set_column(k, apply(col));
        return out;
    }

    const std::map<K1, FinVec<K2>>& columns() const { return columns_; }

    friend bool operator==(const LinMap& a, const LinMap& b) {
        // Missing columns are zero columns.
        for (const auto& [k, col] : a.columns_)
            if (col != b.column(k)) return false;
        for (const auto& [k, col] : b.columns_)
            if (col != a.column(k)) return false;
        return true;
    }

private:
    std::map<K1, FinVec<K2>> columns_;
};

using AlgMap = LinMap<Index, Index>;

/// Flip on A (x) A.
inline Tensor2 flip(const Tensor2& t) {
    Tensor2 out;
    for (const auto& [k, c] : t) out.add({k.second, k.first}, c);
    return out;
}

}  // namespace wmha
