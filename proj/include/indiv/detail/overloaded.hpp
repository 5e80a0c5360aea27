#ifndef INDIV_DETAIL_OVERLOADED_HPP
#define INDIV_DETAIL_OVERLOADED_HPP

namespace indiv::detail {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};

template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

} // namespace indiv::detail

#endif
