#pragma once

// Reader for gzip-compressed ustar archives, enough for PMC bulk files:
// regular members and GNU long-name entries; everything else is skipped.

#include <filesystem>
#include <functional>
#include <string>

namespace bioc::tar {

struct Member {
    std::string name;
    std::string data;
};

// Calls `fn` for each regular-file member in archive order. Throws
// Error(ArchiveUnreadable) when the archive cannot be opened or its framing
// is broken.
void for_each_member(const std::filesystem::path& archive,
                     const std::function<void(Member&&)>& fn);

} // namespace bioc::tar
