#pragma once

// Everything except serialize.hpp, which also needs nlohmann/json.

#include "ssgamma/errors.hpp"
#include "ssgamma/cyclotomic.hpp"
#include "ssgamma/scalar.hpp"
#include "ssgamma/padic.hpp"
#include "ssgamma/matrix.hpp"
#include "ssgamma/characters.hpp"
#include "ssgamma/rankin_selberg.hpp"
#include "ssgamma/parameter.hpp"
