#include "liftvf/vartable.hpp"

#include <stdexcept>

namespace liftvf {

VarTable::VarTable(std::vector<std::string> names, std::vector<int> weights)
    : names_(std::move(names)), weights_(std::move(weights)) {
    if (!weights_.empty() && weights_.size() != names_.size())
        throw std::invalid_argument("weight count does not match variable count");
    for (int w : weights_)
        if (w < 0) throw std::invalid_argument("negative variable weight");
    for (std::size_t i = 0; i < names_.size(); ++i) {
        if (names_[i].empty())
            throw std::invalid_argument("empty variable name");
        if (!index_.emplace(names_[i], i).second)
            throw std::invalid_argument("duplicate variable name '" + names_[i] + "'");
    }
}

VarTablePtr VarTable::create(std::vector<std::string> names, std::vector<int> weights) {
    return VarTablePtr(new VarTable(std::move(names), std::move(weights)));
}

int VarTable::weight(std::size_t i) const {
    if (weights_.empty())
        throw std::logic_error("variable table carries no weights");
    return weights_.at(i);
}

std::optional<std::size_t> VarTable::index_of(std::string_view name) const {
    const auto it = index_.find(name);
    if (it == index_.end()) return std::nullopt;
    return it->second;
}

}  // namespace liftvf
