#pragma once

namespace framescope {

inline constexpr const char* version = "0.1.0";

}
