#
# Copyright (C) 2024 The falconer developers.
#
