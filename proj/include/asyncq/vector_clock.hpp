#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "asyncq/types.hpp"

namespace asyncq {

// Fixed-length logical clock vector, one counter per process. Component i is
// only ever advanced by process i's own state machine, via tick/merged.
class VectorTimestamp {
public:
    VectorTimestamp() = default;
    explicit VectorTimestamp(std::size_t n) : entries_(n, 0) {}
    explicit VectorTimestamp(std::vector<std::uint64_t> entries) : entries_(std::move(entries)) {}

    std::size_t size() const { return entries_.size(); }
    bool empty() const { return entries_.empty(); }
    std::uint64_t operator[](std::size_t i) const { return entries_[i]; }
    const std::vector<std::uint64_t>& entries() const { return entries_; }

    // Own-component increment: the invocation path of the clock update.
    VectorTimestamp ticked(ProcessId owner) const {
        if (owner >= entries_.size())
            throw ConfigError("tick: owner " + std::to_string(owner) + " out of range for n=" +
                              std::to_string(entries_.size()));
        VectorTimestamp out   = *this;
        out.entries_[owner] += 1;
        return out;
    }

    // Receive path: increment own component first, then componentwise max
    // against the received timestamp.
    VectorTimestamp merged(const VectorTimestamp& received, ProcessId owner) const {
        if (received.size() != entries_.size())
            throw ConfigError("merge: length mismatch " + std::to_string(received.size()) +
                              " vs " + std::to_string(entries_.size()));
        VectorTimestamp out = ticked(owner);
        for (std::size_t i = 0; i < entries_.size(); ++i)
            if (received.entries_[i] > out.entries_[i]) out.entries_[i] = received.entries_[i];
        return out;
    }

    friend bool operator==(const VectorTimestamp&, const VectorTimestamp&) = default;

    std::string str() const {
        std::string s = "[";
        for (std::size_t i = 0; i < entries_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(entries_[i]);
        }
        return s + "]";
    }

private:
    std::vector<std::uint64_t> entries_;
};

// Componentwise dominance. False on equal vectors; callers that need "a
// precedes b" should pair this with an equality check.
inline bool strictly_smaller(const VectorTimestamp& a, const VectorTimestamp& b) {
    if (a.size() != b.size())
        throw ConfigError("strictly_smaller: length mismatch");
    if (a == b) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// Total order by first differing component, strict comparison at that index.
// strictly_smaller(a, b) implies lex_compare(a, b) == less; the converse
// fails, e.g. [0,1] vs [1,0].
inline std::strong_ordering lex_compare(const VectorTimestamp& a, const VectorTimestamp& b) {
    if (a.size() != b.size())
        throw ConfigError("lex_compare: length mismatch");
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return std::strong_ordering::less;
        if (a[i] > b[i]) return std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

inline bool lex_less(const VectorTimestamp& a, const VectorTimestamp& b) {
    return lex_compare(a, b) == std::strong_ordering::less;
}

inline bool lex_less_equal(const VectorTimestamp& a, const VectorTimestamp& b) {
    return lex_compare(a, b) != std::strong_ordering::greater;
}

}  // namespace asyncq
