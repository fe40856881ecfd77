#pragma once

#include "uiozeta/errors.hpp"
#include "uiozeta/lattice.hpp"
#include "uiozeta/uio.hpp"
#include "uiozeta/partlist.hpp"
#include "uiozeta/zeta.hpp"
#include "uiozeta/text.hpp"
#include "uiozeta/render.hpp"
#include "uiozeta/harness.hpp"
