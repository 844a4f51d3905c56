#pragma once

#include "pizza/core.hpp"

#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

inline std::vector<std::string> fixture_lines(const std::string& name)
{
    std::ifstream in(std::string(PIZZA_FIXTURES) + "/" + name);
    if (!in)
        throw std::runtime_error("missing fixture " + name);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty())
            lines.push_back(line);
    }
    return lines;
}

inline pizza::Pizza fixture_pizza(const std::string& name, std::size_t line = 0)
{
    return pizza::parse_pizza(fixture_lines(name).at(line));
}
