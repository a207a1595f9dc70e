#ifndef FLORA_FLORA_HPP
#define FLORA_FLORA_HPP

#include <flora/benchmarks.hpp>
#include <flora/core.hpp>
#include <flora/discbrake.hpp>
#include <flora/fpa.hpp>
#include <flora/io.hpp>
#include <flora/levy.hpp>
#include <flora/mofpa.hpp>

#endif
