#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace liftvf {

class VarTable;
using VarTablePtr = std::shared_ptr<const VarTable>;

// Ordered table of distinct variable names, fixed at construction. Each
// variable optionally carries a nonnegative weight, used as the variable
// weight on domain tables and as the coordinate degree on codomain tables.
class VarTable {
public:
    static VarTablePtr create(std::vector<std::string> names,
                              std::vector<int> weights = {});

    std::size_t size() const { return names_.size(); }
    const std::string& name(std::size_t i) const { return names_.at(i); }
    const std::vector<std::string>& names() const { return names_; }

    bool has_weights() const { return !weights_.empty(); }
    int weight(std::size_t i) const;

    std::optional<std::size_t> index_of(std::string_view name) const;

    // Content equality on the ordered name list.
    bool same_as(const VarTable& other) const { return names_ == other.names_; }

private:
    VarTable(std::vector<std::string> names, std::vector<int> weights);

    std::vector<std::string> names_;
    std::vector<int> weights_;
    std::map<std::string, std::size_t, std::less<>> index_;
};

}  // namespace liftvf
