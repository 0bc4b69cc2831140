namespace pennyrig {
} // namespace pennyrig
