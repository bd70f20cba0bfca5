# Tests package for hint-game
