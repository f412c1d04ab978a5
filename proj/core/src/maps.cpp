#include "collatz/maps.hpp"

#include <stdexcept>

namespace collatz {

Int t_step(const Int& value) {
    if (value == 0) throw std::domain_error("t_step: 0 is not in the domain of T");
    if (is_even(value)) return value / 2;
    return (3 * value + 1) / 2;
}

Int f_step(const MapParam& p, const Int& value) {
    if (is_even(value)) return (3 * value - 2 * p.n) / 2;
    return (value + 2 * p.n + 1) / 2;
}

const MapParam& Map::param() const {
    if (!param_) throw std::logic_error("Map::param: T has no family index");
    return *param_;
}

Int Map::anchor() const {
    return param_ ? param_->anchor() : Int(1);
}

Int Map::step(const Int& value) const {
    return param_ ? f_step(*param_, value) : t_step(value);
}

bool Map::indicator(const Int& value) const {
    return param_ ? is_even(value) : is_odd(value);
}

void Map::validate_start(const Int& start) const {
    if (!param_ && start == 0)
        throw std::domain_error("Map: 0 is not in the domain of T");
}

std::string Map::name() const {
    return param_ ? "F_" + param_->n.str() : "T";
}

bool Domain::contains(const Int& p) const {
    return (p >= 2 * n_ + 2) == conjecture_;
}

}  // namespace collatz
