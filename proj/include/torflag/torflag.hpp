#pragma once

#include "torflag/numeric.hpp"
#include "torflag/graph.hpp"
#include "torflag/complex.hpp"
#include "torflag/smith.hpp"
#include "torflag/homology.hpp"
#include "torflag/construction.hpp"
#include "torflag/random_flag.hpp"
#include "torflag/density.hpp"
#include "torflag/induced_search.hpp"
#include "torflag/hochster.hpp"
#include "torflag/io.hpp"
#include "torflag/parallel.hpp"
#include "torflag/experiment.hpp"
#include "torflag/reproduce.hpp"
