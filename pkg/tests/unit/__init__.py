# Unit tests for the channel, bounds, estimation and experiments packages
