#ifndef QPARTID_TESTS_PROCESS_HPP
#define QPARTID_TESTS_PROCESS_HPP

#include <sys/wait.h>
#include <unistd.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace qpartid::test_support
{

struct ProcessResult
{
    int exit_code = -1;
    std::string out;
};

inline std::string slurp(const std::filesystem::path &path)
{
    std::ifstream in(path);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Runs `binary args` through the shell with stdout captured and stderr discarded.
inline ProcessResult run_process(const std::string &binary, const std::string &args)
{
    const auto out_path = std::filesystem::temp_directory_path() /
                          ("qpartid_test_" + std::to_string(::getpid()) + "_" + std::to_string(std::rand()) + ".out");
    const std::string cmd = "'" + binary + "' " + args + " > '" + out_path.string() + "' 2>/dev/null";
    const int status = std::system(cmd.c_str());
    ProcessResult r;
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.out = slurp(out_path);
    std::filesystem::remove(out_path);
    return r;
}

} // namespace qpartid::test_support

#endif
