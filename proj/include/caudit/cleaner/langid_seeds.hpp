#pragma once

#include <string>
#include <utility>
#include <vector>

namespace caudit::cleaner {

std::vector<std::pair<std::string, std::string>> bundled_langid_seeds();

}  // namespace caudit::cleaner
