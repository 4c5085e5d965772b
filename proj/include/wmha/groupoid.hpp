#pragma once

// Finite groupoids. Composition convention: pq is defined iff s(p) = t(q),
// and means "p after q". Units are arrows.

#include "wmha/finvec.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace wmha {

class GroupoidError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Violation {
    std::string axiom;
    std::vector<std::string> witness;  // arrow names
};

struct GroupoidReport {
    std::vector<Violation> violations;
    bool ok() const { return violations.empty(); }
};

class Groupoid {
public:
    /// Builds the tables from named data. Arrows are re-ordered lexicographically.
    /// Throws GroupoidError on duplicate ids or dangling references; the axioms
    /// themselves are not checked here (see validate).
    static Groupoid from_tables(const std::vector<std::string>& arrows,
                                const std::vector<std::string>& units,
                                const std::map<std::string, std::string>& source,
                                const std::map<std::string, std::string>& target,
                                const std::map<std::string, std::string>& inverse,
                                const std::vector<std::array<std::string, 3>>& compose);

    std::size_t size() const { return names_.size(); }
    const std::string& name(Index p) const { return names_[p]; }
    const std::vector<std::string>& names() const { return names_; }
    std::optional<Index> find(const std::string& name) const;
    Index index(const std::string& name) const;

    const std::vector<Index>& units() const { return units_; }
    bool is_unit(Index p) const { return is_unit_[p]; }
    Index source(Index p) const { return source_[p]; }
    Index target(Index p) const { return target_[p]; }
    Index inverse(Index p) const { return inverse_[p]; }

    /// pq when defined in the table.
    std::optional<Index> compose(Index p, Index q) const;
    const std::map<std::pair<Index, Index>, Index>& compose_table() const { return compose_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, Index> by_name_;
    std::vector<Index> units_;
    std::vector<bool> is_unit_;
    std::vector<Index> source_, target_, inverse_;
    std::map<std::pair<Index, Index>, Index> compose_;
};

GroupoidReport validate(const Groupoid& g);

/// A finite group given by element names and a multiplication table
/// (table[i][j] = index of names[i] * names[j]).
struct GroupTable {
    std::vector<std::string> names;
    std::vector<std::vector<std::size_t>> table;

    std::size_t identity() const;
    std::size_t inverse(std::size_t g) const;
};

/// Throws GroupoidError when the table is not a group.
void check_group(const GroupTable& grp);

GroupTable cyclic_group(std::size_t n);
GroupTable symmetric_group(std::size_t n);

Groupoid pair_groupoid(std::size_t n);
Groupoid one_object_group(const GroupTable& grp);
Groupoid group_bundle(const std::vector<GroupTable>& groups);
Groupoid disjoint_union(const Groupoid& a, const Groupoid& b);
Groupoid disjoint_union(const std::vector<Groupoid>& parts);

/// action[g][x] = index of g.x in points.
Groupoid action_groupoid(const GroupTable& grp, const std::vector<std::string>& points,
                         const std::vector<std::vector<std::size_t>>& action);

}  // namespace wmha
