#ifndef MILNOR_VERSION_HPP
#define MILNOR_VERSION_HPP

namespace milnor {

inline constexpr const char *kVersion = "0.1.0";

}

#endif
