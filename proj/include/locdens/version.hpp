#ifndef LOCDENS_VERSION_HPP
#define LOCDENS_VERSION_HPP

namespace locdens {

inline constexpr const char* kVersion = "0.1.0";

}

#endif
